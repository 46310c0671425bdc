// Command-line front end: evaluates words, decides the word problem, and
// emits portraits, Schreier graphs, lifts and shoe permutations as text,
// JSON or DOT.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grig/errors.hpp"
#include "grig/evidence.hpp"
#include "grig/group.hpp"
#include "grig/homology.hpp"
#include "grig/pants.hpp"
#include "grig/portrait.hpp"
#include "grig/schreier.hpp"
#include "grig/serialize.hpp"
#include "grig/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    int depth = 6;
    std::uint64_t seed = 0;
    std::optional<int> cap;
    std::string format = "text";
    std::optional<std::string> section;
    bool depth_given = false;
};

grig::GenWord parse_gen_word(const std::string& token)
{
    if (token == "e")
        return {};
    try {
        return grig::GenWord::parse(token);
    } catch (const grig::InvalidCharacter& e) {
        throw UsageError(std::string("bad generator word: ") + e.what());
    }
}

grig::BinaryWord parse_binary_word(const std::string& token)
{
    if (token == "^")
        return {};
    try {
        return grig::BinaryWord::parse(token);
    } catch (const grig::InvalidCharacter& e) {
        throw UsageError(std::string("bad binary word: ") + e.what());
    }
}

grig::Gen parse_gen(const std::string& token)
{
    if (token.size() != 1 || token[0] < 'a' || token[0] > 'd')
        throw UsageError("expected one of a, b, c, d but got '" + token + "'");
    return static_cast<grig::Gen>(token[0]);
}

class Runner {
public:
    Runner(std::string name, std::vector<std::string> args, const Flags& flags)
        : name_(std::move(name)), args_(std::move(args)), flags_(flags)
    {
    }

    int run();

private:
    void need_args(std::size_t n) const
    {
        if (args_.size() != n)
            throw UsageError(name_ + " expects " + std::to_string(n) + " argument(s), got " +
                             std::to_string(args_.size()));
    }
    void allow_formats(std::initializer_list<const char*> formats) const
    {
        for (const char* f : formats)
            if (flags_.format == f)
                return;
        throw UsageError("format '" + flags_.format + "' is not available for " + name_);
    }
    int int_arg(std::size_t i) const
    {
        try {
            std::size_t used = 0;
            const int value = std::stoi(args_[i], &used);
            if (used != args_[i].size())
                throw std::invalid_argument("trailing characters");
            return value;
        } catch (const std::exception&) {
            throw UsageError("expected an integer but got '" + args_[i] + "'");
        }
    }

    json header() const
    {
        json h = {{"name", name_}, {"args", args_}, {"depth", flags_.depth}, {"seed", flags_.seed},
                  {"format", flags_.format}};
        if (flags_.cap)
            h["cap"] = *flags_.cap;
        if (flags_.section)
            h["section"] = *flags_.section;
        return h;
    }
    void emit_json(json body) const
    {
        body["command"] = header();
        std::cout << body.dump(2) << "\n";
    }

    std::string name_;
    std::vector<std::string> args_;
    Flags flags_;
};

int Runner::run()
{
    const std::string& fmt = flags_.format;
    const bool as_json = fmt == "json";

    if (name_ == "eval" || name_ == "eval-closed") {
        allow_formats({"text", "json"});
        need_args(2);
        const grig::GenWord gw = parse_gen_word(args_[0]);
        grig::BinaryWord w = parse_binary_word(args_[1]);
        if (name_ == "eval") {
            w = grig::apply_word(gw, w);
        } else {
            for (std::size_t i = gw.size(); i-- > 0;)
                w = grig::apply_gen_closed(gw[i], w);
        }
        if (as_json)
            emit_json({{"image", w.str()}});
        else
            std::cout << w.label() << "\n";
        return 0;
    }
    if (name_ == "trivial" || name_ == "equal") {
        allow_formats({"text", "json"});
        bool result = false;
        if (name_ == "trivial") {
            need_args(1);
            result = grig::is_trivial(parse_gen_word(args_[0]));
        } else {
            need_args(2);
            result = grig::equal(parse_gen_word(args_[0]), parse_gen_word(args_[1]));
        }
        if (as_json)
            emit_json({{"result", result}});
        else
            std::cout << (result ? "true" : "false") << "\n";
        return 0;
    }
    if (name_ == "order") {
        allow_formats({"text", "json"});
        need_args(1);
        const std::uint64_t k = grig::order(parse_gen_word(args_[0]), flags_.cap.value_or(grig::kOrderCapExponent));
        if (as_json)
            emit_json({{"order", k}});
        else
            std::cout << k << "\n";
        return 0;
    }
    if (name_ == "portrait") {
        need_args(1);
        const grig::Portrait p =
            grig::portrait(parse_gen_word(args_[0]), flags_.depth, flags_.cap.value_or(grig::kTreeDepthCap));
        if (fmt == "dot")
            std::cout << grig::to_dot(p);
        else if (as_json)
            emit_json(grig::to_json(p));
        else
            for (const grig::BinaryWord& v : p.swap_set())
                std::cout << v.label() << "\n";
        return 0;
    }
    if (name_ == "swaps") {
        allow_formats({"text", "json"});
        need_args(1);
        const auto swaps = grig::swap_vertices(parse_gen(args_[0]), flags_.depth);
        if (as_json) {
            json list = json::array();
            for (const grig::BinaryWord& v : swaps)
                list.push_back(v.str());
            emit_json({{"swaps", list}});
        } else {
            for (const grig::BinaryWord& v : swaps)
                std::cout << v.label() << "\n";
        }
        return 0;
    }
    if (name_ == "schreier") {
        need_args(1);
        const grig::SchreierGraph g = grig::schreier(int_arg(0), flags_.cap.value_or(grig::kTreeDepthCap));
        if (fmt == "dot")
            std::cout << grig::to_dot(g);
        else if (as_json)
            emit_json(grig::to_json(g));
        else
            for (const grig::SchreierEdge& e : g.edges)
                std::cout << e.from.label() << " " << grig::to_char(e.gen) << " " << e.to.label() << "\n";
        return 0;
    }
    if (name_ == "ball") {
        allow_formats({"text", "json"});
        need_args(1);
        const grig::GrowthTable t = grig::ball_sizes(int_arg(0), flags_.cap.value_or(grig::kBallRadiusCap));
        if (as_json) {
            emit_json({{"ball", grig::to_json(t)}});
        } else {
            for (std::size_t r = 0; r < t.sizes.size(); ++r)
                std::cout << r << " " << t.sizes[r] << "\n";
        }
        return 0;
    }
    if (name_ == "sample-orders") {
        allow_formats({"text", "json"});
        need_args(2);
        const int count = int_arg(0), max_len = int_arg(1);
        if (count < 1 || max_len < 1)
            throw UsageError("sample-orders needs count >= 1 and max_len >= 1");
        const grig::OrderHistogram h = grig::sample_orders(static_cast<std::size_t>(count),
                                                           static_cast<std::size_t>(max_len), flags_.seed,
                                                           flags_.cap.value_or(grig::kOrderCapExponent));
        if (as_json) {
            emit_json({{"histogram", grig::to_json(h)}});
        } else {
            for (const auto& [k, n] : h.by_order)
                std::cout << "order " << k << ": " << n << "\n";
            std::cout << "failures: " << h.failures << "\n";
        }
        return 0;
    }
    if (name_ == "lift" || name_ == "kernel") {
        allow_formats({"text", "json"});
        need_args(1);
        const grig::GenWord gw = parse_gen_word(args_[0]);
        if (name_ == "lift") {
            const grig::LiftedElement h = grig::lift_word(gw, flags_.depth);
            if (as_json) {
                emit_json(grig::to_json(h));
            } else {
                std::cout << "swaps:";
                for (const grig::BinaryWord& v : h.portrait().swap_set())
                    std::cout << " " << v.label();
                std::cout << "\n";
                for (const auto& [w, t] : h.twists())
                    std::cout << w.label() << " " << t << "\n";
            }
        } else {
            const auto twists = grig::kernel_vector(gw, flags_.depth);
            if (as_json) {
                emit_json({{"depth", flags_.depth}, {"twists", grig::twists_json(twists)}});
            } else {
                for (const auto& [w, t] : twists)
                    std::cout << w.label() << " " << t << "\n";
            }
        }
        return 0;
    }
    if (name_ == "shoes") {
        allow_formats({"text", "json"});
        need_args(1);
        const grig::ShoePermutation p =
            grig::shoe_perm(parse_gen_word(args_[0]), flags_.depth, flags_.cap.value_or(grig::kTreeDepthCap));
        if (as_json) {
            emit_json(grig::to_json(p));
        } else {
            for (const auto& [from, to] : p.moved())
                std::cout << from.label() << " -> " << to.label() << "\n";
        }
        return 0;
    }
    if (name_ == "verify") {
        allow_formats({"text", "json"});
        need_args(0);
        grig::VerifyOptions options;
        options.depth = flags_.depth_given ? flags_.depth : 0;
        options.seed = flags_.seed;
        options.section = flags_.section;
        const grig::VerifyReport report = grig::run_verify(options);
        if (as_json) {
            emit_json(report.to_json());
        } else {
            std::cout << "note: " << grig::kDRowNotice << "\n";
            for (const grig::SectionResult& s : report.sections)
                std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << "\n";
            std::cout << (report.pass ? "all sections passed" : "some sections FAILED") << "\n";
        }
        return report.pass ? 0 : kExitDomainError;
    }
    throw UsageError("unknown command '" + name_ + "'");
}

const char* kGrammar =
    "commands:\n"
    "  eval <gword> <bword>          eval-closed <gword> <bword>\n"
    "  trivial <gword>               equal <gword> <gword>\n"
    "  order <gword> [--cap e]       portrait <gword> [--depth d]\n"
    "  swaps <a|b|c|d> [--depth d]   schreier <level>\n"
    "  ball <radius>                 sample-orders <count> <max_len> [--seed s]\n"
    "  lift <gword> [--depth d]      kernel <gword> [--depth d]\n"
    "  shoes <gword> [--depth N]     verify [--section name] [--depth d]\n"
    "generator words over abcd (identity: e); binary words over 01 (root: ^)\n"
    "flags: --depth <n> (6) --seed <u64> (0) --cap <n> --format text|json|dot --section <name>\n";

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grigorchuk group, lifted mapping classes and shoe actions"};
    app.footer(kGrammar);
    Flags flags;
    std::string command;
    std::vector<std::string> args;
    app.add_option("command", command, "command name")->required();
    app.add_option("args", args, "command arguments");
    auto* depth_opt = app.add_option("--depth", flags.depth, "tree / lift / shoe depth")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", flags.seed, "random seed");
    app.add_option("--cap", flags.cap, "cap for the command (order exponent, radius or depth)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", flags.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--section", flags.section, "verify section");
    app.positionals_at_end(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << kGrammar;
        return kExitUsage;
    }
    flags.depth_given = depth_opt->count() > 0;

    try {
        Runner runner(command, args, flags);
        return runner.run();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << kGrammar;
        return kExitUsage;
    } catch (const grig::PreconditionFailed& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const grig::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomainError;
    }
}
