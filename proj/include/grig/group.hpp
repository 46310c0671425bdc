#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grig/binary_word.hpp"
#include "grig/gen_word.hpp"
#include "grig/limits.hpp"

namespace grig {

// Generator actions, read off the wreath recursion
//   a = swap,  b = (a, c),  c = (a, d),  d = (1, b).
// The d row fixes the first bit: d(0w) = 0w, d(1w) = 1b(w).

BinaryWord apply_gen(Gen g, const BinaryWord& w);

/// Same function as apply_gen, computed from the bit-flip description:
/// `a` flips bit 1; b, c, d flip the bit right after the first 0 when the
/// number of leading 1s is, mod 3, in {0,1}, {0,2}, {1,2} respectively.
BinaryWord apply_gen_closed(Gen g, const BinaryWord& w);

/// Rightmost letter acts first.
BinaryWord apply_word(const GenWord& gw, const BinaryWord& w);

struct Sections {
    GenWord left;
    GenWord right;
    bool root_swap = false;
};

/// Wreath recursion of a word: gw(x v) = (x ^ root_swap) section_x(v),
/// where section_0 = left and section_1 = right. Letters are not reduced.
Sections sections(const GenWord& gw);

/// Word-problem solver by contraction. Owns a memo table that is confined
/// to the instance; create one per thread.
class WordProblem {
public:
    explicit WordProblem(std::size_t recursion_budget = kRecursionBudget)
        : budget_(recursion_budget)
    {
    }

    bool is_trivial(const GenWord& gw);
    bool equal(const GenWord& lhs, const GenWord& rhs);

    /// Calls spent by the most recent top-level query.
    std::size_t last_call_count() const noexcept { return calls_; }

private:
    bool trivial_reduced(const ReducedWord& rw);

    std::size_t budget_;
    std::size_t calls_ = 0;
    std::unordered_map<std::string, bool> memo_;
};

bool is_trivial(const GenWord& gw, std::size_t recursion_budget = kRecursionBudget);
bool equal(const GenWord& lhs, const GenWord& rhs, std::size_t recursion_budget = kRecursionBudget);

/// Conjugate to a shorter reduced word whose cyclic rotations stay reduced.
ReducedWord cyclic_reduce(const GenWord& gw);

/// Least k with gw^k trivial, by repeated squaring. Returns nullopt when the
/// order exceeds 2^cap_exponent.
std::optional<std::uint64_t> order_within(const GenWord& gw, int cap_exponent, WordProblem& solver);

/// Throws CapExceeded when the order exceeds 2^cap_exponent.
std::uint64_t order(const GenWord& gw, int cap_exponent = kOrderCapExponent);

/// Least level n <= max_level on which gw moves a word, or nullopt.
std::optional<int> minimal_nontrivial_level(const GenWord& gw, int max_level);

/// Closed-form swap vertices of a generator with length < depth, in
/// lexicographic order. `a`: the root. b/c/d: 1...10 with the count of 1s
/// in {0,1}/{0,2}/{1,2} mod 3.
std::vector<BinaryWord> swap_vertices(Gen g, int depth);

} // namespace grig
