#include "grig/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "grig/errors.hpp"
#include "grig/evidence.hpp"
#include "grig/group.hpp"
#include "grig/homology.hpp"
#include "grig/pants.hpp"
#include "grig/portrait.hpp"
#include "grig/schreier.hpp"
#include "grig/serialize.hpp"

namespace grig {

using nlohmann::json;

namespace {

using Check = std::function<SectionResult(const VerifyOptions&)>;

int sweep(const VerifyOptions& o, int base)
{
    return std::max(base, o.depth);
}

bool same_action(const GenWord& x, const GenWord& y, int max_len)
{
    for (const BinaryWord& w : words_up_to(max_len))
        if (apply_word(x, w) != apply_word(y, w))
            return false;
    return true;
}

bool moves_some_word(const GenWord& x, int max_len)
{
    for (const BinaryWord& w : level(max_len).words)
        if (apply_word(x, w) != w)
            return true;
    return false;
}

SectionResult closed_form(const VerifyOptions& o)
{
    const int depth = sweep(o, 14);
    std::size_t checked = 0, mismatches = 0;
    for (const BinaryWord& w : words_up_to(depth)) {
        for (Gen g : kGenerators) {
            ++checked;
            if (apply_gen(g, w) != apply_gen_closed(g, w))
                ++mismatches;
        }
    }
    return {"closed-form", mismatches == 0, {{"depth", depth}, {"checked", checked}, {"mismatches", mismatches}}};
}

SectionResult swaps(const VerifyOptions& o)
{
    const int depth = sweep(o, 12);
    bool pass = true;
    for (Gen g : kGenerators)
        for (int d = 0; d <= depth; ++d)
            pass = pass && swap_vertices(g, d) == portrait(GenWord::of(g), d).swap_set();
    return {"swaps", pass, {{"depth", depth}}};
}

SectionResult klein(const VerifyOptions& o)
{
    const int depth = sweep(o, 12);
    struct Rel {
        const char* lhs;
        const char* rhs;
    };
    const Rel relations[] = {{"aa", ""}, {"bb", ""}, {"cc", ""}, {"dd", ""}, {"bc", "d"}, {"cb", "d"},
                             {"bd", "c"}, {"db", "c"}, {"cd", "b"}, {"dc", "b"}};
    json rows = json::array();
    bool pass = true;
    for (const Rel& r : relations) {
        const GenWord lhs = GenWord::parse(r.lhs), rhs = GenWord::parse(r.rhs);
        const bool by_solver = equal(lhs, rhs);
        const bool by_action = same_action(lhs, rhs, depth);
        pass = pass && by_solver && by_action;
        rows.push_back({{"relation", std::string(r.lhs) + "=" + (r.rhs[0] ? r.rhs : "e")},
                        {"equal", by_solver},
                        {"action", by_action}});
    }
    // {e, b, c, d} is closed under multiplication.
    const GenWord klein_group[] = {GenWord{}, GenWord::parse("b"), GenWord::parse("c"), GenWord::parse("d")};
    for (const GenWord& x : klein_group) {
        for (const GenWord& y : klein_group) {
            const bool closed = std::any_of(std::begin(klein_group), std::end(klein_group),
                                            [&](const GenWord& z) { return equal(x * y, z); });
            pass = pass && closed;
        }
    }
    return {"klein", pass, {{"depth", depth}, {"relations", std::move(rows)}}};
}

SectionResult orders(const VerifyOptions&)
{
    struct Expect {
        const char* word;
        std::uint64_t order;
    };
    const Expect expected[] = {{"ad", 4}, {"ac", 8}, {"ab", 16}};
    json rows = json::array();
    bool pass = true;
    for (const Expect& e : expected) {
        const GenWord w = GenWord::parse(e.word);
        const std::uint64_t k = order(w);
        const bool full_trivial = is_trivial(w.power(e.order));
        const bool half_moves = moves_some_word(w.power(e.order / 2), 16);
        const bool ok = k == e.order && full_trivial && half_moves;
        pass = pass && ok;
        rows.push_back({{"word", e.word}, {"order", k}, {"expected", e.order}, {"power_trivial", full_trivial},
                        {"half_power_moves_level_16", half_moves}});
    }
    return {"orders", pass, {{"orders", std::move(rows)}}};
}

SectionResult torsion(const VerifyOptions& o)
{
    const OrderHistogram hist = sample_orders(500, 16, o.seed, kOrderCapExponent);
    bool pass = hist.failures == 0;
    std::size_t total = hist.failures;
    for (const auto& [k, n] : hist.by_order) {
        pass = pass && std::has_single_bit(k);
        total += n;
    }
    pass = pass && total == hist.samples;
    const GrowthTable ball = ball_sizes(4);
    std::vector<FreenessCertificate> certs;
    for (const auto& [x, y] : {std::pair{"a", "b"}, std::pair{"ab", "ac"}, std::pair{"ad", "ab"}})
        certs.push_back(freeness_refutation(GenWord::parse(x), GenWord::parse(y)));
    return {"torsion", pass, {{"evidence", evidence_report(hist, ball, certs)}}};
}

SectionResult cocycle(const VerifyOptions&)
{
    std::vector<PantsClass> elements;
    for (int s = 0; s < 2; ++s)
        for (int w = -2; w <= 2; ++w)
            for (int l = -2; l <= 2; ++l)
                for (int r = -2; r <= 2; ++r)
                    elements.push_back({s == 1, {w, l, r}});
    std::size_t failures = 0;
    for (const PantsClass& p : elements)
        for (const PantsClass& q : elements) {
            const PantsClass pq = pants_mul(p, q);
            for (const PantsClass& r : elements)
                if (pants_mul(pq, r) != pants_mul(p, pants_mul(q, r)))
                    ++failures;
        }
    const PantsClass sigma2 = pants_mul(kSigma, kSigma);
    const PantsClass sigma4 = pants_mul(sigma2, sigma2);
    const bool sigma_ok = sigma2 == PantsClass{false, {-1, 1, 1}} && sigma4 == PantsClass{false, {-2, 2, 2}};
    return {"cocycle", failures == 0 && sigma_ok,
            {{"triples", elements.size() * elements.size() * elements.size()},
             {"associativity_failures", failures},
             {"sigma_squared", {sigma2.swap, sigma2.twists}}}};
}

SectionResult kernel(const VerifyOptions& o)
{
    const int depth = 6;
    const KernelReport report = check_kernel_abelian(sample_relators(100, o.seed), depth);
    const bool portraits = std::all_of(report.portrait_trivial.begin(), report.portrait_trivial.end(),
                                       [](bool b) { return b; });
    return {"kernel", portraits && report.all_commute,
            {{"depth", depth}, {"relators", report.relators.size()}, {"pairs", report.pairs.size()},
             {"all_commute", report.all_commute}, {"portraits_trivial", portraits}}};
}

SectionResult lift(const VerifyOptions& o)
{
    const std::map<BinaryWord, std::int64_t> expected{
        {BinaryWord{}, -1}, {make_word("0"), 1}, {make_word("1"), 1}};
    const int max_depth = sweep(o, 8);
    bool a_squared = true;
    for (int n = 1; n <= max_depth; ++n) {
        const LiftedElement h = lift_word(GenWord::parse("aa"), n);
        a_squared = a_squared && h.portrait().is_identity() && h.twists() == expected;
    }
    WordSampler sampler(o.seed + 1);
    std::size_t incoherent = 0;
    for (int i = 0; i < 200; ++i) {
        const GenWord w = sampler.any(1 + sampler.below(16));
        if (lift_word(w, 5).truncated(4) != lift_word(w, 4))
            ++incoherent;
    }
    return {"lift", a_squared && incoherent == 0,
            {{"a_squared_depths", max_depth}, {"a_squared", a_squared}, {"coherence_words", 200},
             {"incoherent", incoherent}}};
}

SectionResult homology(const VerifyOptions& o)
{
    WordSampler sampler(o.seed + 2);
    std::size_t hom_failures = 0, block_failures = 0;
    for (int i = 0; i < 500; ++i) {
        const GenWord x = sampler.any(1 + sampler.below(12));
        const GenWord y = sampler.any(1 + sampler.below(12));
        if (shoe_perm(x * y, 6) != compose(shoe_perm(x, 6), shoe_perm(y, 6)))
            ++hom_failures;
        if (i < 50) {
            for (std::size_t b = 0; b < h1_dimension(6); ++b) {
                const SparseVector image = h1_apply(x, 6, {{b, 1}});
                if (image.size() != 1 || image.begin()->first % 2 != b % 2 || image.begin()->second != 1)
                    ++block_failures;
            }
        }
    }
    // Faithfulness at depth 8 over all reduced words of length <= 8.
    std::size_t nontrivial = 0, invisible = 0;
    std::vector<GenWord> layer{GenWord{}};
    WordProblem solver;
    for (int len = 1; len <= 8; ++len) {
        std::vector<GenWord> next;
        for (const GenWord& u : layer)
            for (Gen g : kGenerators) {
                GenWord v = u;
                v.push_back(g);
                if (is_reduced(v))
                    next.push_back(v);
            }
        for (const GenWord& v : next) {
            if (solver.is_trivial(v))
                continue;
            ++nontrivial;
            if (h1_kernel_check(v, 8))
                ++invisible;
        }
        layer = std::move(next);
    }
    return {"homology", hom_failures == 0 && block_failures == 0 && invisible == 0,
            {{"homomorphism_failures", hom_failures}, {"block_failures", block_failures},
             {"nontrivial_words", nontrivial}, {"trivial_at_depth_8", invisible}}};
}

// Ball sizes using only the action on level 2r+4 (no word problem).
std::vector<std::uint64_t> ball_by_level_action(int radius, int lvl)
{
    const std::vector<BinaryWord> words = level(lvl).words;
    const std::uint64_t offset = (std::uint64_t{1} << lvl) - 1;
    std::vector<std::vector<std::uint32_t>> gen_perm;
    for (Gen g : kGenerators) {
        std::vector<std::uint32_t> perm(words.size());
        for (std::size_t i = 0; i < words.size(); ++i)
            perm[i] = static_cast<std::uint32_t>(apply_gen(g, words[i]).heap_index() - offset);
        gen_perm.push_back(std::move(perm));
    }
    std::vector<std::uint32_t> identity(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        identity[i] = static_cast<std::uint32_t>(i);
    std::set<std::vector<std::uint32_t>> seen{identity};
    std::vector<std::vector<std::uint32_t>> sphere{identity};
    std::vector<std::uint64_t> sizes{1};
    for (int r = 1; r <= radius; ++r) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& perm : sphere)
            for (const auto& g : gen_perm) {
                std::vector<std::uint32_t> moved(perm.size());
                for (std::size_t i = 0; i < perm.size(); ++i)
                    moved[i] = perm[g[i]];
                if (seen.insert(moved).second)
                    next.push_back(std::move(moved));
            }
        sizes.push_back(sizes.back() + next.size());
        sphere = std::move(next);
    }
    return sizes;
}

SectionResult growth(const VerifyOptions&)
{
    const GrowthTable table = ball_sizes(10);
    bool pass = table.sizes.size() == 11 && table.sizes[0] == 1;
    pass = pass && std::vector<std::uint64_t>(table.sizes.begin(), table.sizes.begin() + 3) ==
                       std::vector<std::uint64_t>{1, 5, 11};
    for (std::size_t r = 1; r < table.sizes.size(); ++r)
        pass = pass && table.sizes[r] > table.sizes[r - 1];
    json oracle = json::array();
    for (int r = 0; r <= 5; ++r) {
        const std::uint64_t by_action = ball_by_level_action(r, 2 * r + 4).back();
        pass = pass && by_action == table.sizes[static_cast<std::size_t>(r)];
        oracle.push_back(by_action);
    }
    return {"growth", pass, {{"ball", table.sizes}, {"oracle", oracle}}};
}

SectionResult schreier_connectivity(const VerifyOptions& o)
{
    const int max_level = sweep(o, 10);
    bool pass = true;
    for (int n = 1; n <= max_level; ++n)
        pass = pass && is_connected(schreier(n));
    return {"schreier", pass, {{"levels", max_level}}};
}

const std::vector<std::pair<std::string, Check>>& registry()
{
    static const std::vector<std::pair<std::string, Check>> checks{
        {"closed-form", closed_form}, {"swaps", swaps},     {"klein", klein},
        {"orders", orders},           {"torsion", torsion}, {"cocycle", cocycle},
        {"kernel", kernel},           {"lift", lift},       {"homology", homology},
        {"growth", growth},           {"schreier", schreier_connectivity}};
    return checks;
}

} // namespace

json VerifyReport::to_json() const
{
    json sections_json = json::object();
    for (const SectionResult& s : sections) {
        json entry = s.detail;
        entry["pass"] = s.pass;
        sections_json[s.name] = std::move(entry);
    }
    return {{"notice", kDRowNotice}, {"pass", pass}, {"sections", std::move(sections_json)}};
}

const std::vector<std::string>& verify_section_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, check] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

VerifyReport run_verify(const VerifyOptions& options)
{
    if (options.section) {
        const auto& names = verify_section_names();
        if (std::find(names.begin(), names.end(), *options.section) == names.end())
            throw PreconditionFailed("unknown verify section '" + *options.section + "'");
    }
    VerifyReport report;
    for (const auto& [name, check] : registry()) {
        if (options.section && *options.section != name)
            continue;
        report.sections.push_back(check(options));
        report.pass = report.pass && report.sections.back().pass;
    }
    return report;
}

} // namespace grig
