#include "grig/homology.hpp"

#include "grig/errors.hpp"
#include "grig/portrait.hpp"

namespace grig {

ShoePermutation::ShoePermutation(int max_depth, std::vector<std::uint64_t> images)
    : max_depth_(max_depth), images_(std::move(images))
{
    if (images_.size() != grig::shoe_count(max_depth))
        throw PreconditionFailed("shoe permutation has the wrong size");
}

ShoePermutation ShoePermutation::identity(int max_depth)
{
    std::vector<std::uint64_t> images(grig::shoe_count(max_depth));
    for (std::uint64_t i = 0; i < images.size(); ++i)
        images[i] = i;
    return ShoePermutation(max_depth, std::move(images));
}

BinaryWord ShoePermutation::image(const BinaryWord& shoe) const
{
    if (shoe.empty() || shoe.size() > static_cast<std::size_t>(max_depth_))
        throw IndexOutOfRange("no shoe '" + shoe.str() + "' at depth " + std::to_string(max_depth_));
    return BinaryWord::from_heap_index(images_[shoe.heap_index() - 1] + 1);
}

bool ShoePermutation::is_identity() const noexcept
{
    for (std::uint64_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

std::map<BinaryWord, BinaryWord> ShoePermutation::moved() const
{
    std::map<BinaryWord, BinaryWord> out;
    for (std::uint64_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            out.emplace(BinaryWord::from_heap_index(i + 1), BinaryWord::from_heap_index(images_[i] + 1));
    return out;
}

ShoePermutation compose(const ShoePermutation& outer, const ShoePermutation& inner)
{
    if (outer.max_depth_ != inner.max_depth_)
        throw DepthMismatch("shoe permutations of different depth");
    std::vector<std::uint64_t> images(inner.images_.size());
    for (std::uint64_t i = 0; i < images.size(); ++i)
        images[i] = outer.images_[inner.images_[i]];
    return ShoePermutation(inner.max_depth_, std::move(images));
}

std::uint64_t shoe_count(int max_depth)
{
    if (max_depth < 0)
        throw PreconditionFailed("shoe depth must be non-negative");
    return (std::uint64_t{1} << (max_depth + 1)) - 2;
}

ShoePermutation shoe_perm(const GenWord& gw, int max_depth, int depth_cap)
{
    if (max_depth < 1)
        throw PreconditionFailed("shoe depth must be at least 1");
    if (max_depth > depth_cap)
        throw ResourceLimit("shoe depth " + std::to_string(max_depth) + " exceeds cap " +
                            std::to_string(depth_cap));
    const Portrait p = portrait(gw, max_depth, depth_cap);
    std::vector<std::uint64_t> images(shoe_count(max_depth));
    for (std::uint64_t i = 0; i < images.size(); ++i)
        images[i] = p.apply_index(i + 1) - 1;
    return ShoePermutation(max_depth, std::move(images));
}

ShoePermutation end_action(const GenWord& gw, int max_depth, int depth_cap)
{
    return shoe_perm(gw, max_depth, depth_cap);
}

std::uint64_t h1_dimension(int max_depth)
{
    return 2 * shoe_count(max_depth);
}

std::size_t h1_basis_index(const BinaryWord& shoe, int slot, int max_depth)
{
    if (shoe.empty() || shoe.size() > static_cast<std::size_t>(max_depth))
        throw IndexOutOfRange("no shoe '" + shoe.str() + "' at depth " + std::to_string(max_depth));
    if (slot != 1 && slot != 2)
        throw IndexOutOfRange("shoe basis slot must be 1 or 2");
    return 2 * (shoe.heap_index() - 1) + static_cast<std::size_t>(slot - 1);
}

H1Basis h1_basis_element(std::size_t index, int max_depth)
{
    if (index >= h1_dimension(max_depth))
        throw IndexOutOfRange("basis index " + std::to_string(index) + " exceeds H1 dimension");
    return {BinaryWord::from_heap_index(index / 2 + 1), static_cast<int>(index % 2) + 1};
}

SparseVector h1_apply(const GenWord& gw, int max_depth, const SparseVector& v)
{
    const std::uint64_t dim = h1_dimension(max_depth);
    for (const auto& [index, coeff] : v)
        if (index >= dim)
            throw IndexOutOfRange("basis index " + std::to_string(index) + " exceeds H1 dimension " +
                                  std::to_string(dim));
    const ShoePermutation perm = shoe_perm(gw, max_depth);
    SparseVector out;
    for (const auto& [index, coeff] : v) {
        if (coeff == 0)
            continue;
        const std::size_t target = 2 * perm.image_slot(index / 2) + index % 2;
        out[target] += coeff;
    }
    return out;
}

bool h1_kernel_check(const GenWord& gw, int max_depth)
{
    return shoe_perm(gw, max_depth).is_identity();
}

} // namespace grig
