#pragma once

#include <cstdint>
#include <vector>

#include "grig/binary_word.hpp"
#include "grig/gen_word.hpp"
#include "grig/limits.hpp"

namespace grig {

/// Depth-d truncation of a tree automorphism: one swap bit for every vertex
/// of length < d. Bit set = the two subtrees below the vertex are exchanged.
/// Determines the action on every word of length <= d.
class Portrait {
public:
    Portrait() = default;
    explicit Portrait(int depth);

    int depth() const noexcept { return depth_; }

    bool swap_at(const BinaryWord& v) const;
    void set_swap(const BinaryWord& v, bool value);

    bool swap_at_index(std::uint64_t heap_index) const noexcept { return swaps_[heap_index] != 0; }
    void set_swap_at_index(std::uint64_t heap_index, bool value) noexcept { swaps_[heap_index] = value; }

    /// Image of a word of length <= depth.
    BinaryWord apply(const BinaryWord& w) const;
    /// Image of the vertex with the given heap index (length <= depth).
    std::uint64_t apply_index(std::uint64_t heap_index) const;

    bool is_identity() const noexcept;

    /// Swap vertices in lexicographic order.
    std::vector<BinaryWord> swap_set() const;

    /// Same automorphism truncated to a smaller depth.
    Portrait truncated(int depth) const;

    /// outer after inner.
    friend Portrait compose(const Portrait& outer, const Portrait& inner);

    friend bool operator==(const Portrait&, const Portrait&) = default;

private:
    int depth_ = 0;
    std::vector<std::uint8_t> swaps_;
};

/// Portrait of a generator word, computed through its sections.
Portrait portrait(const GenWord& gw, int depth, int depth_cap = kTreeDepthCap);

} // namespace grig
