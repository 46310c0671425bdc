#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "grig/binary_word.hpp"
#include "grig/gen_word.hpp"
#include "grig/limits.hpp"

namespace grig {

/// Permutation of the shoes S_w, one per nonempty word |w| <= N. Shoe w is
/// stored at slot heap_index(w) - 1, so shoes are ordered shortest first.
class ShoePermutation {
public:
    ShoePermutation() = default;
    ShoePermutation(int max_depth, std::vector<std::uint64_t> images);

    static ShoePermutation identity(int max_depth);

    int max_depth() const noexcept { return max_depth_; }
    std::size_t shoe_count() const noexcept { return images_.size(); }

    BinaryWord image(const BinaryWord& shoe) const;
    std::uint64_t image_slot(std::uint64_t slot) const { return images_.at(slot); }

    bool is_identity() const noexcept;
    /// Non-fixed shoes, lexicographic keys.
    std::map<BinaryWord, BinaryWord> moved() const;

    /// outer after inner.
    friend ShoePermutation compose(const ShoePermutation& outer, const ShoePermutation& inner);

    friend bool operator==(const ShoePermutation&, const ShoePermutation&) = default;

private:
    int max_depth_ = 0;
    std::vector<std::uint64_t> images_;
};

std::uint64_t shoe_count(int max_depth);

/// Shoes move the way gw moves the vertices of the tree.
ShoePermutation shoe_perm(const GenWord& gw, int max_depth, int depth_cap = kTreeDepthCap);

/// Same permutation data, read as the action on ends indexed by vertices.
ShoePermutation end_action(const GenWord& gw, int max_depth, int depth_cap = kTreeDepthCap);

// Truncated H1 has two basis classes per shoe; each genus-one shoe
// contributes rank 2, so the dimension is 2 * (2^(N+1) - 2).
std::uint64_t h1_dimension(int max_depth);

/// Flat basis index of class `slot` (1 or 2) of shoe w.
std::size_t h1_basis_index(const BinaryWord& shoe, int slot, int max_depth);

struct H1Basis {
    BinaryWord shoe;
    int slot = 1;
};
H1Basis h1_basis_element(std::size_t index, int max_depth);

using SparseVector = std::map<std::size_t, std::int64_t>;

/// Moves the pair of classes of S_w to the pair of S_{gw(w)}, in order.
SparseVector h1_apply(const GenWord& gw, int max_depth, const SparseVector& v);

/// True iff gw acts trivially on truncated H1, i.e. fixes every shoe.
bool h1_kernel_check(const GenWord& gw, int max_depth);

} // namespace grig
