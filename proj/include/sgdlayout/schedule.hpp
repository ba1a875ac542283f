// schedule.hpp - step-size annealing for the capped-step optimizer.
//
// Step sizes run from eta_max = 1/w_min (every cap mu = min(w eta, 1)
// saturates at 1 on the first iteration) down to eta_min = eps/w_max (the
// strongest constraint still moves by eps at the end). Two shapes:
//
//   fixed       eta(t) = eta_max e^(-lambda t), lambda chosen so that
//               eta(0) = eta_max and eta(t_max - 1) = eta_min.
//   convergent  exponential up to the crossover iteration tau at which the cap
//               stops binding (eta = 1/w_max), then a 1/t tail
//               eta(tau + t) = w_max^-1 / (1 + lambda t), which satisfies
//               sum eta = inf and sum eta^2 < inf.

#pragma once

#include "sgdlayout/stress.hpp"

namespace sgdlayout {

enum class ScheduleKind { Fixed, Convergent };

struct EtaBounds {
    double eta_max = 0.0;
    double eta_min = 0.0;
    double w_min = 0.0;  // over finite, positive weights
    double w_max = 0.0;
};

// eta_max = 1/w_min and eta_min = eps/w_max over the finite, positive term
// weights (infinite focus weights and zeroed sparse sides are excluded).
// Throws if no such weight exists.
EtaBounds eta_bounds(const TermList& terms, double epsilon);

class Schedule {
public:
    static Schedule fixed(const EtaBounds& bounds, int t_max);
    static Schedule convergent(const EtaBounds& bounds, int t_max);

    double eta(int t) const;

    ScheduleKind kind() const { return kind_; }
    double eta_max() const { return eta_max_; }
    double eta_min() const { return eta_min_; }
    double lambda() const { return lambda_; }
    // Crossover iteration; only meaningful for the convergent kind.
    int tau() const { return tau_; }

private:
    ScheduleKind kind_ = ScheduleKind::Fixed;
    double eta_max_ = 1.0;
    double eta_min_ = 1.0;
    double lambda_ = 0.0;
    double inv_w_max_ = 1.0;
    int tau_ = 0;
};

}  // namespace sgdlayout
