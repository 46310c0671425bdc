#include "grig/serialize.hpp"

#include <sstream>

namespace grig {

using nlohmann::json;

namespace {

json word_list(const std::vector<BinaryWord>& words)
{
    json out = json::array();
    for (const BinaryWord& w : words)
        out.push_back(w.str());
    return out;
}

std::string quoted(const BinaryWord& w)
{
    return "\"" + w.label() + "\"";
}

} // namespace

json to_json(const Portrait& p)
{
    return {{"depth", p.depth()}, {"swaps", word_list(p.swap_set())}};
}

json to_json(const SchreierGraph& g)
{
    json edges = json::array();
    for (const SchreierEdge& e : g.edges)
        edges.push_back({{"from", e.from.str()}, {"gen", std::string(1, to_char(e.gen))}, {"to", e.to.str()}});
    return {{"level", g.level}, {"edges", std::move(edges)}};
}

json twists_json(const std::map<BinaryWord, std::int64_t>& twists)
{
    json out = json::object();
    for (const auto& [w, t] : twists)
        out[w.str()] = t;
    return out;
}

json to_json(const LiftedElement& h)
{
    return {{"depth", h.depth()},
            {"portrait", word_list(h.portrait().swap_set())},
            {"twists", twists_json(h.twists())}};
}

json to_json(const ShoePermutation& p)
{
    json moved = json::object();
    for (const auto& [from, to] : p.moved())
        moved[from.str()] = to.str();
    return {{"N", p.max_depth()}, {"moved", std::move(moved)}};
}

json to_json(const OrderHistogram& h)
{
    json by_order = json::object();
    for (const auto& [k, n] : h.by_order)
        by_order[std::to_string(k)] = n;
    return {{"samples", h.samples},   {"by_order", std::move(by_order)},
            {"failures", h.failures}, {"seed", h.seed},
            {"max_len", h.max_len},   {"cap", h.cap}};
}

json to_json(const GrowthTable& t)
{
    return t.sizes;
}

json to_json(const FreenessCertificate& c)
{
    return {{"x", c.x.str()}, {"y", c.y.str()}, {"relation", c.relation()}, {"word", c.expanded.str()}};
}

json to_json(const KernelReport& r)
{
    json relators = json::array();
    for (std::size_t i = 0; i < r.relators.size(); ++i)
        relators.push_back({{"word", r.relators[i].str()}, {"portrait_trivial", bool(r.portrait_trivial[i])}});
    json pairs = json::array();
    for (const CommutationCheck& c : r.pairs)
        pairs.push_back({{"first", c.first}, {"second", c.second}, {"commutes", c.commutes}});
    return {{"depth", r.depth}, {"relators", std::move(relators)}, {"pairs", std::move(pairs)},
            {"all_commute", r.all_commute}};
}

json evidence_report(const OrderHistogram& histogram, const GrowthTable& ball,
                     const std::vector<FreenessCertificate>& certificates)
{
    json certs = json::array();
    for (const FreenessCertificate& c : certificates)
        certs.push_back(to_json(c));
    return {{"histogram", to_json(histogram)}, {"ball", to_json(ball)}, {"certificates", std::move(certs)}};
}

std::string to_dot(const Portrait& p)
{
    std::ostringstream out;
    out << "digraph portrait {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (const BinaryWord& v : words_up_to(p.depth()))
        out << "  " << quoted(v) << ";\n";
    if (p.depth() > 0) {
        for (const BinaryWord& v : words_up_to(p.depth() - 1)) {
            const bool swapped = p.swap_at(v);
            for (int bit : {0, 1}) {
                out << "  " << quoted(v) << " -> " << quoted(v.child(bit));
                if (swapped)
                    out << " [color=\"black:black\"]";
                out << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const SchreierGraph& g)
{
    std::ostringstream out;
    out << "graph schreier_" << g.level << " {\n";
    for (const BinaryWord& v : g.vertices)
        out << "  " << quoted(v) << ";\n";
    for (const SchreierEdge& e : g.edges) {
        if (e.to < e.from)
            continue; // involution: the reverse edge is the same orbit
        out << "  " << quoted(e.from) << " -- " << quoted(e.to) << " [label=\"" << to_char(e.gen) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace grig
