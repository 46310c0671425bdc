#include "grig/gen_word.hpp"

#include <algorithm>

#include "grig/errors.hpp"

namespace grig {

namespace {

// b, c, d as the non-zero elements of (Z/2)^2: b=1, c=2, d=3.
int klein_code(char ch) noexcept
{
    return ch - 'a';
}

char klein_letter(int code) noexcept
{
    return static_cast<char>('a' + code);
}

} // namespace

Gen gen_from_char(char ch)
{
    if (ch < 'a' || ch > 'd')
        throw InvalidCharacter("generator word contains '" + std::string(1, ch) + "'");
    return static_cast<Gen>(ch);
}

GenWord GenWord::parse(std::string_view text)
{
    std::string letters;
    letters.reserve(text.size());
    for (char ch : text)
        letters.push_back(to_char(gen_from_char(ch)));
    return GenWord(std::move(letters));
}

GenWord GenWord::reversed() const
{
    return GenWord(std::string(letters_.rbegin(), letters_.rend()));
}

GenWord GenWord::power(std::size_t k) const
{
    std::string out;
    out.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i)
        out += letters_;
    return GenWord(std::move(out));
}

ReducedWord reduce(const GenWord& gw)
{
    std::string stack;
    stack.reserve(gw.size());
    for (char ch : gw.str()) {
        if (stack.empty()) {
            stack.push_back(ch);
            continue;
        }
        const char top = stack.back();
        if (top == ch) {
            stack.pop_back();
        } else if (top != 'a' && ch != 'a') {
            // Below a Klein letter there is always an `a`, so the merged
            // letter cannot trigger a further merge.
            stack.back() = klein_letter(klein_code(top) ^ klein_code(ch));
        } else {
            stack.push_back(ch);
        }
    }
    return ReducedWord(GenWord::parse(stack));
}

bool is_reduced(const GenWord& gw) noexcept
{
    const std::string& s = gw.str();
    return std::adjacent_find(s.begin(), s.end(), [](char x, char y) {
               return x == y || (x != 'a' && y != 'a');
           }) == s.end();
}

} // namespace grig
