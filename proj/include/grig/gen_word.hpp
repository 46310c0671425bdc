#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace grig {

enum class Gen : char { a = 'a', b = 'b', c = 'c', d = 'd' };

inline constexpr Gen kGenerators[] = {Gen::a, Gen::b, Gen::c, Gen::d};

inline char to_char(Gen g) noexcept { return static_cast<char>(g); }
Gen gen_from_char(char ch);

/// A word over {a,b,c,d}. The rightmost letter acts first, so "ab" means
/// "apply b, then a". The empty word is the identity.
class GenWord {
public:
    GenWord() = default;

    /// Parses letters over "abcd"; throws InvalidCharacter otherwise.
    static GenWord parse(std::string_view text);
    static GenWord of(Gen g) { return GenWord(std::string(1, to_char(g))); }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Gen operator[](std::size_t i) const noexcept { return static_cast<Gen>(letters_[i]); }

    const std::string& str() const noexcept { return letters_; }

    void push_back(Gen g) { letters_.push_back(to_char(g)); }
    void append(const GenWord& other) { letters_ += other.letters_; }

    /// Inverse element: every generator is an involution.
    GenWord reversed() const;
    GenWord power(std::size_t k) const;

    friend GenWord operator*(const GenWord& lhs, const GenWord& rhs)
    {
        return GenWord(lhs.letters_ + rhs.letters_);
    }

    friend auto operator<=>(const GenWord&, const GenWord&) = default;
    friend bool operator==(const GenWord&, const GenWord&) = default;

private:
    explicit GenWord(std::string letters) : letters_(std::move(letters)) {}

    std::string letters_;
};

/// A word with no adjacent equal letters and no two adjacent letters from
/// {b,c,d}; letters therefore alternate between `a` and {b,c,d}.
class ReducedWord {
public:
    ReducedWord() = default;

    const GenWord& word() const noexcept { return word_; }
    operator const GenWord&() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }
    const std::string& str() const noexcept { return word_.str(); }

    friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

private:
    explicit ReducedWord(GenWord w) : word_(std::move(w)) {}
    friend ReducedWord reduce(const GenWord& gw);

    GenWord word_;
};

/// Normal form via a^2 = b^2 = c^2 = d^2 = 1 and bc = d, bd = c, cd = b.
/// Single left-to-right stack pass; never lengthens the word.
ReducedWord reduce(const GenWord& gw);

bool is_reduced(const GenWord& gw) noexcept;

} // namespace grig
