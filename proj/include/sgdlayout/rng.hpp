// rng.hpp - seedable, portable random number generation.
//
// Layout runs must be reproducible bit-for-bit given (graph, params, seed),
// so everything random goes through this xoshiro256++ generator rather than
// <random> distributions (whose output is implementation-defined). A run's
// seed is split into independent substreams, one per purpose:
//
//   Init       initial vertex positions
//   Shuffle    term orderings
//   Degenerate fallback directions for coincident vertex pairs
//   Pivot      pivot sampling in the sparse model
//   Probe      pair sampling for approximate stress evaluation
//
// Substream k of seed s is xoshiro256++ seeded from
// splitmix64(s ^ (k * 0x9e3779b97f4a7c15)).

#pragma once

#include <cstdint>
#include <vector>

namespace sgdlayout {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ (Blackman & Vigna), state expanded from the seed via splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) {
            word = sm.next();
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform in [0, bound), free of modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

enum class RngStream : std::uint64_t {
    Init = 1,
    Shuffle = 2,
    Degenerate = 3,
    Pivot = 4,
    Probe = 5,
};

inline Rng make_stream(std::uint64_t seed, RngStream stream) {
    SplitMix64 sm(seed ^ (static_cast<std::uint64_t>(stream) * 0x9e3779b97f4a7c15ULL));
    return Rng(sm.next());
}

// In-place Fisher-Yates shuffle driven by our Rng (std::shuffle is not
// reproducible across standard library implementations).
template <typename T>
void fisher_yates(std::vector<T>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::swap(values[i - 1], values[static_cast<std::size_t>(rng.next_below(i))]);
    }
}

// Uniformly random direction, via rejection sampling in the unit ball.
std::vector<double> random_unit_vector(int dim, Rng& rng);

}  // namespace sgdlayout
