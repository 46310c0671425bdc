#include "grig/evidence.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "grig/errors.hpp"
#include "grig/group.hpp"
#include "grig/portrait.hpp"

namespace grig {

namespace {

constexpr Gen kKlein[] = {Gen::b, Gen::c, Gen::d};

// Level whose action keys the ball buckets; `equal` decides inside a bucket.
constexpr int kBucketLevel = 8;

std::string bucket_key(const GenWord& gw)
{
    const Portrait p = portrait(gw, kBucketLevel);
    std::string key;
    key.reserve((std::size_t{1} << kBucketLevel) - 1);
    for (std::uint64_t i = 0; i + 1 < (std::uint64_t{1} << kBucketLevel); ++i)
        key.push_back(p.swap_at_index(i) ? '1' : '0');
    return key;
}

} // namespace

std::uint64_t WordSampler::below(std::uint64_t bound)
{
    if (bound == 0)
        throw PreconditionFailed("sampling bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t draw = rng_();
    while (draw >= limit)
        draw = rng_();
    return draw % bound;
}

ReducedWord WordSampler::reduced(std::size_t length)
{
    if (length == 0)
        return {};
    // Words starting with `a` have floor(L/2) Klein letters, the others
    // ceil(L/2); weight the first letter accordingly (1:1 for even L, 1:3
    // for odd L).
    const bool starts_with_a = length % 2 == 0 ? below(2) == 0 : below(4) == 0;
    GenWord out;
    for (std::size_t i = 0; i < length; ++i) {
        const bool is_a = (i % 2 == 0) == starts_with_a;
        out.push_back(is_a ? Gen::a : kKlein[below(3)]);
    }
    ReducedWord rw = reduce(out);
    if (rw.size() != length)
        throw std::logic_error("sampler produced a non-reduced word");
    return rw;
}

GenWord WordSampler::any(std::size_t length)
{
    GenWord out;
    for (std::size_t i = 0; i < length; ++i)
        out.push_back(kGenerators[below(4)]);
    return out;
}

OrderHistogram sample_orders(std::size_t count, std::size_t max_len, std::uint64_t seed, int cap)
{
    if (count < 1 || max_len < 1)
        throw PreconditionFailed("sample_orders needs count >= 1 and max_len >= 1");
    OrderHistogram hist;
    hist.samples = count;
    hist.seed = seed;
    hist.max_len = max_len;
    hist.cap = cap;
    WordSampler sampler(seed);
    WordProblem solver;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t length = 1 + sampler.below(max_len);
        const ReducedWord w = sampler.reduced(length);
        if (auto k = order_within(w, cap, solver))
            ++hist.by_order[*k];
        else
            ++hist.failures;
    }
    return hist;
}

GrowthTable ball_sizes(int radius, int radius_cap)
{
    if (radius < 0)
        throw PreconditionFailed("radius must be non-negative");
    if (radius > radius_cap)
        throw ResourceLimit("radius " + std::to_string(radius) + " exceeds cap " + std::to_string(radius_cap));

    WordProblem solver;
    std::unordered_map<std::string, std::vector<GenWord>> buckets;
    std::vector<GenWord> sphere{GenWord{}};
    buckets[bucket_key(GenWord{})].push_back(GenWord{});

    GrowthTable table;
    table.sizes.push_back(1);
    for (int r = 1; r <= radius; ++r) {
        std::vector<GenWord> next;
        for (const GenWord& u : sphere) {
            for (Gen g : kGenerators) {
                const ReducedWord candidate = reduce(u * GenWord::of(g));
                // Shorter reduced forms already lie in B(r-1).
                if (candidate.size() < static_cast<std::size_t>(r))
                    continue;
                std::vector<GenWord>& bucket = buckets[bucket_key(candidate)];
                bool seen = false;
                for (const GenWord& known : bucket) {
                    if (solver.equal(known, candidate)) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) {
                    bucket.push_back(candidate);
                    next.push_back(candidate);
                }
            }
        }
        table.sizes.push_back(table.sizes.back() + next.size());
        sphere = std::move(next);
    }
    return table;
}

FreenessCertificate freeness_refutation(const GenWord& x, const GenWord& y, int cap)
{
    FreenessCertificate cert;
    cert.x = x;
    cert.y = y;
    WordProblem solver;
    if (auto k = order_within(x, cap, solver)) {
        cert.base = 'x';
        cert.exponent = *k;
        cert.expanded = x.power(*k);
    } else if (auto k2 = order_within(y, cap, solver)) {
        cert.base = 'y';
        cert.exponent = *k2;
        cert.expanded = y.power(*k2);
    } else {
        throw CapExceeded("orders of both '" + x.str() + "' and '" + y.str() + "' exceed 2^" +
                          std::to_string(cap));
    }
    if (!solver.is_trivial(cert.expanded))
        throw std::logic_error("freeness certificate " + cert.relation() + " is not trivial");
    return cert;
}

} // namespace grig
