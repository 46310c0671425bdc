#include "grig/binary_word.hpp"

#include <bit>

#include "grig/errors.hpp"

namespace grig {

BinaryWord BinaryWord::parse(std::string_view text)
{
    std::string bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw InvalidCharacter("binary word contains '" + std::string(1, ch) + "'");
        bits.push_back(ch);
    }
    return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::from_heap_index(std::uint64_t index)
{
    const int len = std::bit_width(index + 1) - 1;
    const std::uint64_t value = index + 1 - (std::uint64_t{1} << len);
    std::string bits(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i)
        if ((value >> (len - 1 - i)) & 1u)
            bits[static_cast<std::size_t>(i)] = '1';
    return BinaryWord(std::move(bits));
}

int BinaryWord::bit(std::size_t i) const
{
    if (i < 1 || i > bits_.size())
        throw IndexOutOfRange("bit " + std::to_string(i) + " of a word of length " +
                              std::to_string(bits_.size()));
    return bits_[i - 1] == '1' ? 1 : 0;
}

BinaryWord BinaryWord::flipped(std::size_t i) const
{
    if (i < 1 || i > bits_.size())
        throw IndexOutOfRange("cannot flip bit " + std::to_string(i) + " of a word of length " +
                              std::to_string(bits_.size()));
    std::string out = bits_;
    out[i - 1] = out[i - 1] == '0' ? '1' : '0';
    return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::child(int bit) const
{
    std::string out = bits_;
    out.push_back(bit ? '1' : '0');
    return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::prefix(std::size_t n) const
{
    return BinaryWord(bits_.substr(0, n));
}

std::uint64_t BinaryWord::heap_index() const noexcept
{
    std::uint64_t value = 0;
    for (char ch : bits_)
        value = (value << 1) | (ch == '1' ? 1u : 0u);
    return (std::uint64_t{1} << bits_.size()) - 1 + value;
}

BinaryWord make_word(std::string_view text)
{
    return BinaryWord::parse(text);
}

BinaryWord flip_bit(const BinaryWord& w, std::size_t i)
{
    return w.flipped(i);
}

LevelSet level(int n, int depth_cap)
{
    if (n < 0)
        throw PreconditionFailed("level depth must be non-negative");
    if (n > depth_cap)
        throw ResourceLimit("level " + std::to_string(n) + " exceeds depth cap " +
                            std::to_string(depth_cap));
    LevelSet out;
    out.n = n;
    const std::uint64_t count = std::uint64_t{1} << n;
    out.words.reserve(count);
    const std::uint64_t first = count - 1;
    for (std::uint64_t k = 0; k < count; ++k)
        out.words.push_back(BinaryWord::from_heap_index(first + k));
    return out;
}

std::vector<BinaryWord> words_up_to(int n, int depth_cap)
{
    if (n < 0)
        throw PreconditionFailed("depth must be non-negative");
    if (n > depth_cap)
        throw ResourceLimit("depth " + std::to_string(n) + " exceeds depth cap " +
                            std::to_string(depth_cap));
    const std::uint64_t total = (std::uint64_t{1} << (n + 1)) - 1;
    std::vector<BinaryWord> out;
    out.reserve(total);
    for (std::uint64_t k = 0; k < total; ++k)
        out.push_back(BinaryWord::from_heap_index(k));
    return out;
}

} // namespace grig
