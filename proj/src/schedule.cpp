#include "sgdlayout/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace sgdlayout {

EtaBounds eta_bounds(const TermList& terms, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    double w_min = kInfiniteWeight;
    double w_max = 0.0;
    for (const Term& t : terms) {
        for (double w : {t.w_ij, t.w_ji}) {
            if (w > 0.0 && std::isfinite(w)) {
                w_min = std::min(w_min, w);
                w_max = std::max(w_max, w);
            }
        }
    }
    if (w_max == 0.0) {
        throw std::invalid_argument("term list has no finite positive weight");
    }
    return {1.0 / w_min, epsilon / w_max, w_min, w_max};
}

Schedule Schedule::fixed(const EtaBounds& bounds, int t_max) {
    if (t_max < 2) {
        throw std::invalid_argument("fixed schedule needs t_max >= 2");
    }
    Schedule s;
    s.kind_ = ScheduleKind::Fixed;
    s.eta_max_ = bounds.eta_max;
    s.eta_min_ = bounds.eta_min;
    s.inv_w_max_ = 1.0 / bounds.w_max;
    if (bounds.eta_max > bounds.eta_min) {
        s.lambda_ = std::log(bounds.eta_max / bounds.eta_min) / (t_max - 1);
    } else {
        // Degenerate bounds (all weights equal and epsilon >= 1): constant
        // schedule, never below eta_min.
        s.lambda_ = 0.0;
        s.eta_max_ = bounds.eta_min;
    }
    return s;
}

Schedule Schedule::convergent(const EtaBounds& bounds, int t_max) {
    Schedule s = fixed(bounds, t_max);
    s.kind_ = ScheduleKind::Convergent;
    // Smallest integer iteration at which the exponential has dropped to the
    // point where no cap binds; the 1/t tail starts at exactly 1/w_max there.
    if (s.lambda_ <= 0.0 || bounds.eta_max <= s.inv_w_max_) {
        s.tau_ = 0;
    } else {
        s.tau_ = static_cast<int>(std::ceil(std::log(bounds.eta_max * bounds.w_max) / s.lambda_));
    }
    return s;
}

double Schedule::eta(int t) const {
    if (kind_ == ScheduleKind::Convergent && t >= tau_) {
        return inv_w_max_ / (1.0 + lambda_ * (t - tau_));
    }
    return eta_max_ * std::exp(-lambda_ * t);
}

}  // namespace sgdlayout
