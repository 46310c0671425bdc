#include <doctest.h>

#include "grig/group.hpp"
#include "grig/serialize.hpp"

using namespace grig;
using nlohmann::json;

TEST_CASE("portrait json")
{
    const json j = to_json(portrait(GenWord::parse("b"), 3));
    CHECK(j == json::parse(R"({"depth": 3, "swaps": ["0", "10"]})"));
    CHECK(to_json(portrait(GenWord::parse("a"), 1)) == json::parse(R"({"depth": 1, "swaps": [""]})"));
    CHECK(to_json(Portrait(4)).at("swaps") == json::array());
}

TEST_CASE("schreier graph json")
{
    const json j = to_json(schreier(1));
    CHECK(j.at("level") == 1);
    CHECK(j.at("edges").size() == 8);
    CHECK(j.at("edges")[0] == json::parse(R"({"from": "0", "gen": "a", "to": "1"})"));
    for (const json& e : j.at("edges"))
        CHECK(e.size() == 3);
}

TEST_CASE("lifted element json")
{
    const json j = to_json(lift_word(GenWord::parse("aa"), 1));
    CHECK(j == json::parse(R"({"depth": 1, "portrait": [], "twists": {"": -1, "0": 1, "1": 1}})"));
    CHECK(to_json(LiftedElement::identity(3)).at("twists") == json::object());
}

TEST_CASE("shoe permutation json")
{
    CHECK(to_json(shoe_perm(GenWord::parse("a"), 1)) == json::parse(R"({"N": 1, "moved": {"0": "1", "1": "0"}})"));
    CHECK(to_json(shoe_perm(GenWord{}, 3)).at("moved") == json::object());
}

TEST_CASE("histogram and evidence report json")
{
    const OrderHistogram h = sample_orders(100, 1, 3, 20);
    const json j = to_json(h);
    CHECK(j == json::parse(
                   R"({"by_order": {"2": 100}, "cap": 20, "failures": 0, "max_len": 1, "samples": 100, "seed": 3})"));

    const json report =
        evidence_report(h, ball_sizes(2), {freeness_refutation(GenWord::parse("a"), GenWord::parse("b"))});
    CHECK(report.at("ball") == json::parse("[1, 5, 11]"));
    CHECK(report.at("certificates")[0] ==
          json::parse(R"({"relation": "x^2", "word": "aa", "x": "a", "y": "b"})"));
    CHECK(report.at("histogram") == j);
}

TEST_CASE("kernel report json")
{
    const KernelReport r = check_kernel_abelian({GenWord::parse("aa"), GenWord::parse("dd")}, 3);
    const json j = to_json(r);
    CHECK(j.at("depth") == 3);
    CHECK(j.at("relators").size() == 2);
    CHECK(j.at("relators")[0] == json::parse(R"({"portrait_trivial": true, "word": "aa"})"));
    CHECK(j.at("all_commute") == true);
}

TEST_CASE("portrait dot")
{
    const std::string dot = to_dot(portrait(GenWord::parse("a"), 2));
    CHECK(dot.rfind("digraph portrait {", 0) == 0);
    CHECK(dot.find("\"^\" -> \"0\" [color=\"black:black\"];") != std::string::npos);
    CHECK(dot.find("\"^\" -> \"1\" [color=\"black:black\"];") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"00\";") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"11\";") != std::string::npos);
    CHECK(dot.back() == '\n');
}

TEST_CASE("schreier dot")
{
    const std::string dot = to_dot(schreier(1));
    CHECK(dot.rfind("graph schreier_1 {", 0) == 0);
    CHECK(dot.find("\"0\" -- \"1\" [label=\"a\"];") != std::string::npos);
    CHECK(dot.find("\"1\" -- \"1\" [label=\"d\"];") != std::string::npos);
    // One undirected edge per orbit: a single a-edge at level 1.
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = dot.find("label=\"a\"", pos)) != std::string::npos; ++pos)
        ++count;
    CHECK(count == 1);
}

TEST_CASE("serialization is deterministic")
{
    CHECK(to_json(schreier(5)).dump() == to_json(schreier(5)).dump());
    CHECK(to_json(lift_word(GenWord::parse("adadadad"), 4)).dump() ==
          to_json(lift_word(GenWord::parse("adadadad"), 4)).dump());
    CHECK(to_dot(schreier(4)) == to_dot(schreier(4)));
}
