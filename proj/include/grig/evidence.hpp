#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "grig/gen_word.hpp"
#include "grig/limits.hpp"

namespace grig {

/// Deterministic word sampler. Draws use a fixed reduction of the 64-bit
/// Mersenne Twister output, so sequences match across standard libraries.
class WordSampler {
public:
    explicit WordSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

    /// Uniform over reduced words of exactly this length.
    ReducedWord reduced(std::size_t length);
    /// Uniform over all words of this length (not reduced).
    GenWord any(std::size_t length);

private:
    std::mt19937_64 rng_;
};

struct OrderHistogram {
    std::size_t samples = 0;
    std::map<std::uint64_t, std::size_t> by_order; // only non-zero counts
    std::size_t failures = 0;                      // order above 2^cap
    std::uint64_t seed = 0;
    std::size_t max_len = 0;
    int cap = 0;
};

/// Orders of `count` random reduced words; lengths uniform in [1, max_len].
OrderHistogram sample_orders(std::size_t count, std::size_t max_len, std::uint64_t seed,
                             int cap = kOrderCapExponent);

/// sizes[r] = |B(r)| for r = 0..R.
struct GrowthTable {
    std::vector<std::uint64_t> sizes;
};

/// Breadth-first ball enumeration over reduced words, deduplicated with the
/// word-problem solver.
GrowthTable ball_sizes(int radius, int radius_cap = kBallRadiusCap);

/// A nonempty word in {x, y} that is trivial in G, which rules out
/// <x, y> being free on {x, y}.
struct FreenessCertificate {
    GenWord x;
    GenWord y;
    char base = 'x';           // which generator is raised to a power
    std::uint64_t exponent = 0;
    GenWord expanded;          // the certificate spelled over {a,b,c,d}

    std::string relation() const { return std::string(1, base) + "^" + std::to_string(exponent); }
};

/// Uses x^order(x), falling back to y^order(y). Throws CapExceeded when
/// both orders exceed 2^cap.
FreenessCertificate freeness_refutation(const GenWord& x, const GenWord& y,
                                        int cap = kOrderCapExponent);

} // namespace grig
