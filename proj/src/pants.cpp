#include "grig/pants.hpp"

#include <algorithm>
#include <stdexcept>

#include "grig/errors.hpp"
#include "grig/evidence.hpp"
#include "grig/group.hpp"

namespace grig {

namespace {

std::uint64_t model_vertices(int depth) noexcept
{
    return (std::uint64_t{1} << (depth + 2)) - 1;
}

} // namespace

PantsClass pants_mul(const PantsClass& p, const PantsClass& q)
{
    PantsClass out;
    out.swap = p.swap != q.swap;
    const std::int64_t q_left = p.swap ? q.twists[2] : q.twists[1];
    const std::int64_t q_right = p.swap ? q.twists[1] : q.twists[2];
    out.twists = {p.twists[0] + q.twists[0], p.twists[1] + q_left, p.twists[2] + q_right};
    if (p.swap && q.swap)
        for (std::size_t i = 0; i < 3; ++i)
            out.twists[i] += kSigmaSquaredTwists[i];
    return out;
}

LiftedElement::LiftedElement(int depth) : depth_(depth)
{
    if (depth < 0)
        throw PreconditionFailed("lift depth must be non-negative");
    if (depth + 2 > kTreeDepthCap)
        throw ResourceLimit("lift depth " + std::to_string(depth) + " exceeds cap");
    portrait_ = Portrait(depth + 2);
    twists_.assign(model_vertices(depth), 0);
}

std::int64_t LiftedElement::twist_at(const BinaryWord& w) const
{
    if (w.size() > static_cast<std::size_t>(depth_ + 1))
        throw IndexOutOfRange("vertex '" + w.str() + "' is outside a depth-" + std::to_string(depth_) +
                              " lift");
    return twists_[w.heap_index()];
}

std::map<BinaryWord, std::int64_t> LiftedElement::twists() const
{
    std::map<BinaryWord, std::int64_t> out;
    for (std::uint64_t i = 0; i < twists_.size(); ++i)
        if (twists_[i] != 0)
            out.emplace(BinaryWord::from_heap_index(i), twists_[i]);
    return out;
}

bool LiftedElement::twists_zero() const noexcept
{
    return std::all_of(twists_.begin(), twists_.end(), [](std::int64_t t) { return t == 0; });
}

LiftedElement LiftedElement::truncated(int depth) const
{
    if (depth > depth_)
        throw PreconditionFailed("cannot truncate a lift to a larger depth");
    LiftedElement out(depth);
    out.portrait_ = portrait_.truncated(depth + 2);
    std::copy_n(twists_.begin(), out.twists_.size(), out.twists_.begin());
    return out;
}

LiftedElement lift_gen(Gen g, int depth)
{
    LiftedElement out(depth);
    out.portrait_ = portrait(GenWord::of(g), depth + 2);
    return out;
}

LiftedElement lifted_mul(const LiftedElement& h1, const LiftedElement& h2)
{
    if (h1.depth_ != h2.depth_)
        throw DepthMismatch("cannot multiply lifts of depth " + std::to_string(h1.depth_) + " and " +
                            std::to_string(h2.depth_));
    LiftedElement out(h1.depth_);
    out.portrait_ = compose(h1.portrait_, h2.portrait_);
    const std::uint64_t count = out.twists_.size();
    for (std::uint64_t v = 0; v < count; ++v) {
        const std::uint64_t moved = h2.portrait_.apply_index(v);
        out.twists_[v] += h2.twists_[v] + h1.twists_[moved];
        if (h2.portrait_.swap_at_index(v) && h1.portrait_.swap_at_index(moved)) {
            out.twists_[v] += kSigmaSquaredTwists[0];
            const std::uint64_t left = 2 * v + 1;
            if (left < count) {
                out.twists_[left] += kSigmaSquaredTwists[1];
                out.twists_[left + 1] += kSigmaSquaredTwists[2];
            }
        }
    }
    return out;
}

LiftedElement lift_word(const GenWord& gw, int depth)
{
    std::array<LiftedElement, 4> gens;
    for (Gen g : kGenerators)
        gens[static_cast<std::size_t>(to_char(g) - 'a')] = lift_gen(g, depth);
    LiftedElement out(depth);
    for (std::size_t i = 0; i < gw.size(); ++i)
        out = lifted_mul(out, gens[static_cast<std::size_t>(to_char(gw[i]) - 'a')]);
    return out;
}

std::map<BinaryWord, std::int64_t> kernel_vector(const GenWord& gw, int depth)
{
    if (!is_trivial(gw))
        throw NotARelator("'" + gw.str() + "' is not trivial in G");
    const LiftedElement h = lift_word(gw, depth);
    if (!h.portrait().is_identity())
        throw std::logic_error("relator '" + gw.str() + "' lifted to a nontrivial portrait");
    return h.twists();
}

KernelReport check_kernel_abelian(const std::vector<GenWord>& relators, int depth)
{
    WordProblem solver;
    for (const GenWord& r : relators)
        if (!solver.is_trivial(r))
            throw NotARelator("'" + r.str() + "' is not trivial in G");

    KernelReport report;
    report.depth = depth;
    report.relators = relators;
    std::vector<LiftedElement> lifts;
    lifts.reserve(relators.size());
    for (const GenWord& r : relators) {
        lifts.push_back(lift_word(r, depth));
        report.portrait_trivial.push_back(lifts.back().portrait().is_identity());
    }
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        for (std::size_t j = i + 1; j < lifts.size(); ++j) {
            const bool commutes = lifted_mul(lifts[i], lifts[j]) == lifted_mul(lifts[j], lifts[i]);
            report.pairs.push_back({i, j, commutes});
            report.all_commute = report.all_commute && commutes;
        }
    }
    return report;
}

std::vector<GenWord> sample_relators(std::size_t count, std::uint64_t seed)
{
    const GenWord bases[] = {GenWord::parse("ad").power(4), GenWord::parse("ac").power(8),
                             GenWord::parse("ab").power(16)};
    WordSampler sampler(seed);
    auto conjugate = [&](const GenWord& r) {
        const GenWord w = sampler.any(sampler.below(7));
        return w * r * w.reversed();
    };
    std::vector<GenWord> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i % 4 < 3) {
            out.push_back(conjugate(bases[i % 4]));
        } else {
            const GenWord g = GenWord::of(kGenerators[sampler.below(4)]);
            const GenWord h = GenWord::of(kGenerators[sampler.below(4)]);
            out.push_back(conjugate(g * g) * conjugate(h * h));
        }
    }
    return out;
}

} // namespace grig
