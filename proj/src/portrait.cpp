#include "grig/portrait.hpp"

#include <algorithm>
#include <bit>

#include "grig/errors.hpp"
#include "grig/group.hpp"

namespace grig {

namespace {

std::uint64_t vertex_count(int depth) noexcept
{
    return (std::uint64_t{1} << depth) - 1;
}

void fill(Portrait& p, const ReducedWord& rw, std::uint64_t index, int remaining)
{
    if (remaining == 0 || rw.empty())
        return;
    const Sections s = sections(rw);
    p.set_swap_at_index(index, s.root_swap);
    fill(p, reduce(s.left), 2 * index + 1, remaining - 1);
    fill(p, reduce(s.right), 2 * index + 2, remaining - 1);
}

} // namespace

Portrait::Portrait(int depth) : depth_(depth)
{
    if (depth < 0)
        throw PreconditionFailed("portrait depth must be non-negative");
    if (depth > kTreeDepthCap)
        throw ResourceLimit("portrait depth " + std::to_string(depth) + " exceeds cap");
    swaps_.assign(vertex_count(depth), 0);
}

bool Portrait::swap_at(const BinaryWord& v) const
{
    if (v.size() >= static_cast<std::size_t>(depth_))
        throw IndexOutOfRange("vertex '" + v.str() + "' is outside a depth-" + std::to_string(depth_) +
                              " portrait");
    return swaps_[v.heap_index()] != 0;
}

void Portrait::set_swap(const BinaryWord& v, bool value)
{
    if (v.size() >= static_cast<std::size_t>(depth_))
        throw IndexOutOfRange("vertex '" + v.str() + "' is outside a depth-" + std::to_string(depth_) +
                              " portrait");
    swaps_[v.heap_index()] = value;
}

BinaryWord Portrait::apply(const BinaryWord& w) const
{
    if (w.size() > static_cast<std::size_t>(depth_))
        throw IndexOutOfRange("word '" + w.str() + "' is longer than the portrait depth");
    std::string out = w.str();
    std::uint64_t index = 0; // heap index of the source prefix
    for (char& ch : out) {
        const bool bit = ch == '1';
        if (swaps_[index])
            ch = bit ? '0' : '1';
        index = 2 * index + 1 + (bit ? 1 : 0);
    }
    return WordAccess::adopt(std::move(out));
}

std::uint64_t Portrait::apply_index(std::uint64_t heap_index) const
{
    const int len = std::bit_width(heap_index + 1) - 1;
    if (len > depth_)
        throw IndexOutOfRange("vertex index is outside the portrait");
    const std::uint64_t value = heap_index + 1 - (std::uint64_t{1} << len);
    std::uint64_t source = 0;
    std::uint64_t image = 0;
    for (int i = len - 1; i >= 0; --i) {
        const std::uint64_t bit = (value >> i) & 1u;
        image = (image << 1) | (bit ^ swaps_[source]);
        source = 2 * source + 1 + bit;
    }
    return (std::uint64_t{1} << len) - 1 + image;
}

bool Portrait::is_identity() const noexcept
{
    return std::all_of(swaps_.begin(), swaps_.end(), [](std::uint8_t s) { return s == 0; });
}

std::vector<BinaryWord> Portrait::swap_set() const
{
    std::vector<BinaryWord> out;
    for (std::uint64_t i = 0; i < swaps_.size(); ++i)
        if (swaps_[i])
            out.push_back(BinaryWord::from_heap_index(i));
    std::sort(out.begin(), out.end());
    return out;
}

Portrait Portrait::truncated(int depth) const
{
    if (depth > depth_)
        throw PreconditionFailed("cannot truncate a portrait to a larger depth");
    Portrait out(depth);
    std::copy_n(swaps_.begin(), out.swaps_.size(), out.swaps_.begin());
    return out;
}

Portrait compose(const Portrait& outer, const Portrait& inner)
{
    if (outer.depth_ != inner.depth_)
        throw DepthMismatch("cannot compose portraits of depth " + std::to_string(outer.depth_) +
                            " and " + std::to_string(inner.depth_));
    Portrait out(inner.depth_);
    // Vertices of length < depth are mapped by the inner portrait to
    // vertices of the same length, still inside the outer portrait.
    for (std::uint64_t v = 0; v < out.swaps_.size(); ++v) {
        const std::uint64_t moved = inner.apply_index(v);
        out.swaps_[v] = inner.swaps_[v] ^ outer.swaps_[moved];
    }
    return out;
}

Portrait portrait(const GenWord& gw, int depth, int depth_cap)
{
    if (depth < 0)
        throw PreconditionFailed("portrait depth must be non-negative");
    if (depth > depth_cap)
        throw ResourceLimit("portrait depth " + std::to_string(depth) + " exceeds cap " +
                            std::to_string(depth_cap));
    Portrait p(depth);
    fill(p, reduce(gw), 0, depth);
    return p;
}

} // namespace grig
