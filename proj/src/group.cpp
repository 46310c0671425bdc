#include "grig/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "grig/errors.hpp"

namespace grig {

namespace {

struct GenSections {
    const char* left;
    const char* right;
    bool swap;
};

GenSections gen_sections(Gen g) noexcept
{
    switch (g) {
    case Gen::a: return {"", "", true};
    case Gen::b: return {"a", "c", false};
    case Gen::c: return {"a", "d", false};
    case Gen::d: return {"", "b", false};
    }
    return {"", "", false};
}

bool closed_form_flips(Gen g, std::size_t leading_ones) noexcept
{
    switch (leading_ones % 3) {
    case 0: return g == Gen::b || g == Gen::c;
    case 1: return g == Gen::b || g == Gen::d;
    default: return g == Gen::c || g == Gen::d;
    }
}

void flip(char& ch) noexcept
{
    ch = ch == '0' ? '1' : '0';
}

// Walks the generator recursion down the word in place.
void apply_gen_in_place(char g, std::string& bits)
{
    for (char& ch : bits) {
        switch (g) {
        case 'a':
            flip(ch);
            return;
        case 'b':
            g = ch == '0' ? 'a' : 'c';
            break;
        case 'c':
            g = ch == '0' ? 'a' : 'd';
            break;
        case 'd':
            if (ch == '0')
                return;
            g = 'b';
            break;
        }
    }
}

std::size_t contraction_bound(std::size_t n) noexcept
{
    return (n + 2) / 2; // ceil((n + 1) / 2)
}

} // namespace

BinaryWord apply_gen(Gen g, const BinaryWord& w)
{
    std::string bits = w.str();
    apply_gen_in_place(to_char(g), bits);
    return WordAccess::adopt(std::move(bits));
}

BinaryWord apply_gen_closed(Gen g, const BinaryWord& w)
{
    std::string bits = w.str();
    if (g == Gen::a) {
        if (!bits.empty())
            flip(bits[0]);
        return WordAccess::adopt(std::move(bits));
    }
    const std::size_t first_zero = bits.find('0');
    if (first_zero == std::string::npos || first_zero + 1 >= bits.size())
        return w;
    // first_zero equals the number of leading 1s.
    if (closed_form_flips(g, first_zero))
        flip(bits[first_zero + 1]);
    return WordAccess::adopt(std::move(bits));
}

BinaryWord apply_word(const GenWord& gw, const BinaryWord& w)
{
    std::string bits = w.str();
    const std::string& letters = gw.str();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        apply_gen_in_place(*it, bits);
    return WordAccess::adopt(std::move(bits));
}

Sections sections(const GenWord& gw)
{
    // gw = x1 x2 ... xk acting right to left; the section at x is
    // x1|p1 x2|p2 ... xk|pk where pk = x and p(i-1) = pi ^ swap(xi).
    const std::string& letters = gw.str();
    std::string left, right;
    bool pos_of_left = false; // current image of the root's 0-child
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        const GenSections s = gen_sections(static_cast<Gen>(*it));
        const char* at_zero = pos_of_left ? s.right : s.left;
        const char* at_one = pos_of_left ? s.left : s.right;
        left.insert(0, at_zero);
        right.insert(0, at_one);
        if (s.swap)
            pos_of_left = !pos_of_left;
    }
    return {GenWord::parse(left), GenWord::parse(right), pos_of_left};
}

bool WordProblem::is_trivial(const GenWord& gw)
{
    calls_ = 0;
    return trivial_reduced(reduce(gw));
}

bool WordProblem::equal(const GenWord& lhs, const GenWord& rhs)
{
    return is_trivial(lhs * rhs.reversed());
}

bool WordProblem::trivial_reduced(const ReducedWord& rw)
{
    if (++calls_ > budget_)
        throw RecursionBudgetExceeded("word problem exceeded " + std::to_string(budget_) +
                                      " recursive calls");
    if (rw.empty())
        return true;
    if (rw.size() == 1)
        return false;
    if (auto hit = memo_.find(rw.str()); hit != memo_.end())
        return hit->second;

    const Sections s = sections(rw);
    bool result = false;
    if (!s.root_swap) {
        const ReducedWord left = reduce(s.left);
        const ReducedWord right = reduce(s.right);
        const std::size_t n = rw.size();
        const std::size_t bound = contraction_bound(n);
        if (left.size() > bound || right.size() > bound || (n >= 3 && (left.size() >= n || right.size() >= n)))
            throw std::logic_error("contraction violated for " + rw.str());
        result = trivial_reduced(left) && trivial_reduced(right);
    }
    memo_.emplace(rw.str(), result);
    return result;
}

bool is_trivial(const GenWord& gw, std::size_t recursion_budget)
{
    WordProblem solver(recursion_budget);
    return solver.is_trivial(gw);
}

bool equal(const GenWord& lhs, const GenWord& rhs, std::size_t recursion_budget)
{
    WordProblem solver(recursion_budget);
    return solver.equal(lhs, rhs);
}

ReducedWord cyclic_reduce(const GenWord& gw)
{
    ReducedWord rw = reduce(gw);
    auto mergeable = [](char x, char y) { return x == y || (x != 'a' && y != 'a'); };
    while (rw.size() >= 2 && mergeable(rw.str().front(), rw.str().back())) {
        const std::string& s = rw.str();
        GenWord rotated = GenWord::parse(std::string_view(s).substr(1));
        rotated.push_back(static_cast<Gen>(s.front()));
        rw = reduce(rotated);
    }
    return rw;
}

std::optional<std::uint64_t> order_within(const GenWord& gw, int cap_exponent, WordProblem& solver)
{
    // Orders in G are powers of two. When gw^(2^e) is trivial, gw^(2^(e-1))
    // was tested nontrivial on the previous pass.
    ReducedWord power = cyclic_reduce(gw);
    for (int e = 0;; ++e) {
        if (solver.is_trivial(power))
            return std::uint64_t{1} << e;
        if (e >= cap_exponent)
            return std::nullopt;
        power = cyclic_reduce(power.word() * power.word());
    }
}

std::uint64_t order(const GenWord& gw, int cap_exponent)
{
    if (cap_exponent < 1)
        throw PreconditionFailed("order cap exponent must be at least 1");
    WordProblem solver;
    if (auto k = order_within(gw, cap_exponent, solver))
        return *k;
    throw CapExceeded("order of " + gw.str() + " exceeds 2^" + std::to_string(cap_exponent));
}

std::optional<int> minimal_nontrivial_level(const GenWord& gw, int max_level)
{
    if (max_level < 0)
        throw PreconditionFailed("max_level must be non-negative");
    // Distinct sections at vertices of the current level; the action on
    // level k+1 is nontrivial iff some section at level k swaps its root.
    std::vector<ReducedWord> frontier{reduce(gw)};
    for (int k = 0; k < max_level; ++k) {
        std::vector<ReducedWord> next;
        for (const ReducedWord& rw : frontier) {
            if (rw.empty())
                continue;
            const Sections s = sections(rw);
            if (s.root_swap)
                return k + 1;
            next.push_back(reduce(s.left));
            next.push_back(reduce(s.right));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::erase_if(next, [](const ReducedWord& rw) { return rw.empty(); });
        if (next.empty())
            return std::nullopt;
        frontier = std::move(next);
    }
    return std::nullopt;
}

std::vector<BinaryWord> swap_vertices(Gen g, int depth)
{
    if (depth < 0)
        throw PreconditionFailed("depth must be non-negative");
    std::vector<BinaryWord> out;
    if (g == Gen::a) {
        if (depth >= 1)
            out.emplace_back();
        return out;
    }
    // 1^k 0 has length k + 1.
    for (int k = 0; k + 1 < depth; ++k) {
        if (closed_form_flips(g, static_cast<std::size_t>(k)))
            out.push_back(WordAccess::adopt(std::string(static_cast<std::size_t>(k), '1') + '0'));
    }
    // Lexicographic order: "0" < "10" < "110" < ..., already sorted.
    return out;
}

} // namespace grig
