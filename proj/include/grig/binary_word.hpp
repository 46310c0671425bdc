#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grig/limits.hpp"

namespace grig {

/// A vertex of the rooted binary tree: a finite word over {0,1}. The empty
/// word is the root. Bits are addressed 1-based, so bit(1) is the first
/// letter read from the root.
class BinaryWord {
public:
    BinaryWord() = default;

    /// Parses a string of '0'/'1'. Throws InvalidCharacter otherwise.
    static BinaryWord parse(std::string_view text);

    /// The vertex with breadth-first index `index` (root = 0, children of
    /// vertex i are 2i+1 and 2i+2).
    static BinaryWord from_heap_index(std::uint64_t index);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    /// 1-based bit access; throws IndexOutOfRange.
    int bit(std::size_t i) const;

    BinaryWord flipped(std::size_t i) const;
    BinaryWord child(int bit) const;
    BinaryWord prefix(std::size_t n) const;

    /// Breadth-first index: 2^len - 1 + (bits read as a binary number).
    std::uint64_t heap_index() const noexcept;

    /// '0'/'1' characters; the root is "".
    const std::string& str() const noexcept { return bits_; }
    /// Like str() but the root is spelled "^".
    std::string label() const { return bits_.empty() ? std::string("^") : bits_; }

    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

private:
    explicit BinaryWord(std::string bits) : bits_(std::move(bits)) {}
    friend class WordAccess;

    std::string bits_;
};

/// Internal escape hatch for hot loops that already hold validated bits.
class WordAccess {
public:
    static BinaryWord adopt(std::string bits) { return BinaryWord(std::move(bits)); }
};

struct LevelSet {
    int n = 0;
    std::vector<BinaryWord> words;
};

BinaryWord make_word(std::string_view text);
BinaryWord flip_bit(const BinaryWord& w, std::size_t i);

/// All 2^n words of length n in lexicographic order.
LevelSet level(int n, int depth_cap = kTreeDepthCap);

/// Every word of length <= n, shortest first, lexicographic within a level.
std::vector<BinaryWord> words_up_to(int n, int depth_cap = kTreeDepthCap);

} // namespace grig
