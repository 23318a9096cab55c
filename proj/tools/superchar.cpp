#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "superchar/characters.hpp"
#include "superchar/homology.hpp"
#include "superchar/klcore.hpp"
#include "superchar/liealg.hpp"
#include "superchar/reflections.hpp"
#include "superchar/serialize.hpp"
#include "superchar/verify.hpp"

#ifndef SUPERCHAR_VERSION
#define SUPERCHAR_VERSION "0.0.0"
#endif

using namespace superchar;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int m = 1;
    std::string Y = "[]";
    std::string window = "0,0,2";
    int rank = 0;
    std::uint64_t seed = 7;
    std::string out = "json";

    std::string lambda = "[]";
    std::string weight;
    std::string chain = "c";
    int n = 0;
    std::string type = "irr";
    std::string algebra = "g";
    std::string memo;
    int degree = 2;
    std::string suite = "all";
};

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error&) {
        throw UsageError(what + " is not valid JSON");
    }
}

// JSON list, with or without brackets (config files strip them).
Json parse_list(const std::string& s, const std::string& what) {
    std::string t = s;
    if (t.empty() || t.front() != '[') t = "[" + t + "]";
    return parse_json(t, what);
}

std::vector<int> parse_Y(const std::string& s) {
    std::vector<int> Y = parse_list(s, "--Y").get<std::vector<int>>();
    std::sort(Y.begin(), Y.end());
    return Y;
}

// "N_even,N_odd,D" or a bare depth.
Window parse_window(const std::string& s) {
    std::vector<int> v;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            v.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("--window must be N_even,N_odd,D");
        }
    }
    if (v.size() == 1) return Window{0, 0, v[0]};
    if (v.size() != 3) throw UsageError("--window must be N_even,N_odd,D");
    for (int x : v)
        if (x < 0) throw UsageError("--window components must be nonnegative");
    return Window{v[0], v[1], v[2]};
}

DominantWeight weight_option(const Options& o) {
    if (o.weight.empty()) throw UsageError("--weight is required");
    return dominant_from_json(parse_json(o.weight, "--weight"), o.m, parse_Y(o.Y));
}

Json config_json(const std::string& command, const Options& o) {
    Json c{{"command", command}, {"m", o.m},         {"Y", o.Y},         {"window", o.window},
           {"rank", o.rank},     {"out", o.out}};
    if (command == "theta") c["lambda"] = o.lambda;
    if (command != "theta" && command != "verify") c["weight"] = o.weight;
    if (command == "reflect-trace") {
        c["chain"] = o.chain;
        c["n"] = o.n;
    }
    if (command == "char") {
        c["type"] = o.type;
        c["algebra"] = o.algebra;
        c["n"] = o.n;
    }
    if (command == "kl") c["memo"] = o.memo;
    if (command == "homology") {
        c["algebra"] = o.algebra;
        c["degree"] = o.degree;
    }
    if (command == "verify") c["suite"] = o.suite;
    return c;
}

std::string weight_text(const Json& w) {
    std::string s;
    for (const auto& [k, v] : w.at("coords").items()) s += (s.empty() ? "" : " ") + k + ":" + v.dump();
    return s.empty() ? "0" : s;
}

void print_table(const std::string& command, const Json& result, std::ostream& os) {
    if (command == "char") {
        for (const auto& t : result.at("terms")) os << t.at("mult").dump() << "\t" << weight_text(t.at("weight")) << "\n";
    } else if (command == "verify") {
        for (const auto& r : result.at("criteria"))
            os << (r.at("passed").get<bool>() ? "PASS" : "FAIL") << "\t" << r.at("id") << "\t"
               << r.at("key").get<std::string>() << "\t" << r.at("checks") << "\n";
    } else if (command == "homology") {
        for (const auto& r : result.at("table")) {
            os << r.at("degree") << "\t";
            if (r.contains("levi_hw"))
                os << weight_text(r.at("levi_hw")) << "\t" << r.at("mult").dump() << "\n";
            else
                os << weight_text(r.at("weight")) << "\t" << r.at("dim").dump() << "\n";
        }
    } else {
        os << result.dump(2) << "\n";
    }
}

Json cmd_theta(const Options& o) {
    return Json{{"theta", theta_json(theta(partition_from_json(parse_list(o.lambda, "--lambda"))))}};
}

Json cmd_natural(const Options& o) {
    auto d = weight_option(o);
    return Json{{"weight", dominant_json(d)},
                {"standard", weight_json(to_standard(d))},
                {"natural", weight_json(to_natural(d))},
                {"theta", weight_json(to_theta(d))}};
}

Json cmd_reflect_trace(const Options& o) {
    auto d = weight_option(o);
    if (o.n < 1) throw UsageError("--n must be positive");
    std::vector<OddRoot> seq;
    if (o.chain == "c")
        seq = sequence_c(o.n);
    else if (o.chain == "s")
        seq = sequence_s(o.n);
    else
        throw UsageError("--chain must be c or s");
    auto steps = replay_trace(to_theta(d), seq);
    return Json{{"start", weight_json(to_theta(d))}, {"trace", trace_json(steps)}};
}

Algebra algebra_option(const Options& o) {
    try {
        return parse_algebra(o.algebra);
    } catch (const std::exception&) {
        throw UsageError("--algebra must be g, gbar or gtilde");
    }
}

Json cmd_char(const Options& o) {
    Window win = parse_window(o.window);
    if (o.type == "finite") {
        if (o.n < 1) throw UsageError("--n must be positive for finite characters");
        if (o.weight.empty()) throw UsageError("--weight is required");
        Weight gamma = weight_from_json(parse_json(o.weight, "--weight"));
        return character_json(ch_finite_irreducible(gamma, o.m, o.n, win.depth));
    }
    auto d = weight_option(o);
    Algebra alg = algebra_option(o);
    if (win.n_even == 0 && win.n_odd == 0) {
        int big = d.pos.size() + win.depth + 1;
        win.n_even = win.n_odd = big;
    }
    if (o.type == "verma") return character_json(ch_parabolic_verma(d, alg, win));
    if (o.type == "irr") return character_json(ch_irreducible(d, alg, win, o.rank));
    if (o.type == "tilting") return character_json(ch_tilting(d, alg, win, o.rank));
    throw UsageError("--type must be verma, irr, finite or tilting");
}

Json cmd_kl(const Options& o) {
    auto d = weight_option(o);
    int N = o.rank > 0 ? o.rank : default_rank(d, 0);
    auto cls = linkage_class(d, N);
    const std::string sig = cls.signature();
    if (!o.memo.empty()) {
        std::ifstream in(o.memo);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Json rec = Json::parse(line, nullptr, false);
            if (rec.is_discarded() || rec.value("class_signature", "") != sig || rec.value("rank", -1) != N) continue;
            KLTable t;
            t.cls = cls;
            for (const auto& row : rec.at("L")) {
                t.L.emplace_back();
                for (const auto& p : row) t.L.back().push_back(laurent_from_json(p));
            }
            for (const auto& row : rec.at("U")) {
                t.U.emplace_back();
                for (const auto& p : row) t.U.back().push_back(laurent_from_json(p));
            }
            Json out = kl_json(t);
            out["memo"] = "hit";
            return out;
        }
    }
    auto t = kl_canonical(cls);
    if (auto bad = check_kl_table(t); !bad.empty()) throw std::runtime_error("KL table failed its contract: " + bad);
    Json out = kl_json(t);
    if (!o.memo.empty()) {
        std::ofstream app(o.memo, std::ios::app);
        app << Json{{"class_signature", sig}, {"rank", N}, {"L", out["L"]}, {"U", out["U"]}}.dump() << "\n";
        out["memo"] = "stored";
    }
    return out;
}

Json cmd_homology(const Options& o) {
    auto d = weight_option(o);
    Window win = parse_window(o.window);
    int N = o.rank > 0 ? o.rank : default_rank(d, win.depth);
    Json table = Json::array();
    if (o.algebra == "g") {
        GlSuper g = GlSuper::even(d.m + N);
        auto lam = classical_coords(d, N);
        auto blocks = levi_blocks(d.m, d.Y, N);
        ChainComplex cx(nilradical_minus(g, blocks), module_of(std::make_shared<IrreducibleModule>(g, lam)));
        auto pos = classical_positions(d.m, N);
        for (const auto& e : homology_groups(cx, blocks, window_weights(lam, win.depth), o.degree)) {
            Weight w;
            for (std::size_t i = 0; i < pos.size(); ++i) w.add(pos[i], e.levi_hw[i]);
            table.push_back(Json{{"degree", e.degree}, {"levi_hw", weight_json(w)}, {"mult", big_json(e.mult)}});
        }
        return Json{{"algebra", "g"}, {"rank", N}, {"table", table}};
    }
    if (o.algebra == "gtilde") {
        auto pre = interpolating_prefix(d, N);
        ChainComplex cx(nilradical_minus(pre.g, pre.blocks),
                        module_of(std::make_shared<IrreducibleModule>(pre.g, pre.top)));
        for (int k = 0; k <= o.degree; ++k)
            for (const auto& wv : window_weights(pre.top, win.depth)) {
                int dim = cx.homology_dim(k, wv);
                if (!dim) continue;
                Weight w;
                for (std::size_t i = 0; i < wv.size(); ++i) w.add(pre.labels[i], wv[i]);
                table.push_back(Json{{"degree", k}, {"weight", weight_json(w)}, {"dim", dim}});
            }
        auto match = super_boundary_matching(d, win.depth, N, o.degree);
        return Json{{"algebra", "gtilde"},
                    {"positive_indices", N},
                    {"table", table},
                    {"matches_classical", match.ok}};
    }
    throw UsageError("--algebra must be g or gtilde");
}

Json cmd_verify(const Options& o, bool& all_passed) {
    std::vector<int> ids;
    try {
        ids = suite_criteria(o.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Json rows = Json::array();
    int passed = 0;
    for (int id : ids) {
        auto r = run_criterion(id, o.seed);
        passed += r.passed;
        rows.push_back(criterion_json(r));
        std::cerr << (r.passed ? "PASS " : "FAIL ") << id << " " << r.key << " (" << r.checks << " checks)"
                  << (r.passed ? "" : "  " + r.detail) << "\n";
    }
    all_passed = passed == static_cast<int>(ids.size());
    return Json{{"suite", o.suite}, {"passed", passed}, {"total", ids.size()}, {"criteria", rows}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Super duality characters, KL coefficients and homology", "superchar"};
    app.set_version_flag("--version", SUPERCHAR_VERSION);
    app.set_config("--config", "", "key=value configuration file; command-line flags win");
    app.require_subcommand(1);
    Options o;
    app.add_option("--m", o.m, "Size of the negative block")->check(CLI::PositiveNumber);
    app.add_option("--Y", o.Y, "Subset of [-m,-2], as a JSON list or comma list")->join(',');
    app.add_option("--window", o.window, "N_even,N_odd,D");
    app.add_option("--rank", o.rank, "Truncated rank N for KL (0 picks a default)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", o.seed, "Seed for randomized suites");
    app.add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "table"}));

    auto* theta_cmd = app.add_subcommand("theta", "theta sequence of a partition")->fallthrough();
    theta_cmd->add_option("--lambda", o.lambda, "Partition as a JSON array")->join(',');
    auto* natural_cmd = app.add_subcommand("natural", "standard, natural and theta parametrizations")->fallthrough();
    natural_cmd->add_option("--weight", o.weight, "Dominant weight JSON");
    auto* trace_cmd = app.add_subcommand("reflect-trace", "odd reflection walk from the theta weight")->fallthrough();
    trace_cmd->add_option("--weight", o.weight, "Dominant weight JSON");
    trace_cmd->add_option("--chain", o.chain, "c or s");
    trace_cmd->add_option("--n", o.n, "Number of positive indices");
    auto* char_cmd = app.add_subcommand("char", "characters on a window")->fallthrough();
    char_cmd->add_option("--type", o.type, "verma, irr, finite or tilting");
    char_cmd->add_option("--algebra", o.algebra, "g, gbar or gtilde");
    char_cmd->add_option("--weight", o.weight, "Dominant weight JSON (a weight JSON for finite)");
    char_cmd->add_option("--n", o.n, "Odd rank n of gl(m|n) for finite characters");
    auto* kl_cmd = app.add_subcommand("kl", "L and U matrices of a linkage class")->fallthrough();
    kl_cmd->add_option("--weight", o.weight, "Dominant weight JSON");
    kl_cmd->add_option("--memo", o.memo, "Append-only JSONL memo file");
    auto* hom_cmd = app.add_subcommand("homology", "u_- homology tables")->fallthrough();
    hom_cmd->add_option("--algebra", o.algebra, "g or gtilde");
    hom_cmd->add_option("--weight", o.weight, "Dominant weight JSON");
    hom_cmd->add_option("--degree", o.degree, "Largest degree")->check(CLI::NonNegativeNumber);
    auto* verify_cmd = app.add_subcommand("verify", "run acceptance suites")->fallthrough();
    verify_cmd->add_option("--suite", o.suite, "all, a criterion key or a module name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    bool ok = true;
    Json result;
    try {
        if (command == "theta") result = cmd_theta(o);
        else if (command == "natural") result = cmd_natural(o);
        else if (command == "reflect-trace") result = cmd_reflect_trace(o);
        else if (command == "char") result = cmd_char(o);
        else if (command == "kl") result = cmd_kl(o);
        else if (command == "homology") result = cmd_homology(o);
        else result = cmd_verify(o, ok);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (o.out == "table") {
        print_table(command, result, std::cout);
    } else {
        Json report{{"version", SUPERCHAR_VERSION}, {"seed", o.seed}, {"config", config_json(command, o)},
                    {"result", result}};
        std::cout << report.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}
