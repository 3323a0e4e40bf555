#include "oddcolor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddcolor/graph_io.hpp"
#include "oddcolor/odd_graph.hpp"
#include "oddcolor/reduction.hpp"
#include "oddcolor/strong_coloring.hpp"

namespace oddcolor {
namespace {

using nlohmann::json;

// Exit-code carrying error for the dispatcher.
struct Failure {
    int code;
    std::string message;
};

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw Failure{kExitInvalid, "cannot open " + path};
        ss << f.rdbuf();
    }
    return ss.str();
}

SimpleGraph load_graph(const std::string& path, std::istream& in) {
    std::istringstream ss(slurp(path, in));
    return read_graph(ss);
}

json length_json(std::optional<int> v) { return v ? json(*v) : json("inf"); }

json report_json(const PreconditionReport& r) {
    json checks = json::array();
    for (const auto& m : r.checks)
        checks.push_back({{"name", m.name}, {"value", m.value}, {"requirement", m.requirement}, {"ok", m.ok}});
    return {{"ok", r.ok()}, {"checks", checks}};
}

std::vector<AlgorithmMode> modes_for(const SimpleGraph& g) {
    const int d = std::max(4, g.max_degree());
    std::vector<AlgorithmMode> out;
    if (d <= kMaxOddParameter) {
        out.push_back({Variant::high_girth, d});
        out.push_back({Variant::mad_based, d});
    }
    out.push_back({Variant::subcubic_girth41, 3});
    out.push_back({Variant::subcubic_mad, 3});
    return out;
}

int cmd_invariants(const std::string& file, bool as_json, std::ostream& out, std::istream& in) {
    const SimpleGraph g = load_graph(file, in);
    const GirthProfile gp = girth_profile(g);
    const std::string m = g.vertex_count() ? mad(g).to_string() : "0";
    if (as_json) {
        json j = {{"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"max_degree", g.max_degree()},
                  {"girth", length_json(gp.girth)},
                  {"odd_girth", length_json(gp.odd_girth)},
                  {"even_girth", length_json(gp.even_girth)},
                  {"mad", m}};
        json pre = json::object();
        for (const auto& mode : modes_for(g)) {
            json r = report_json(check_preconditions(g, mode));
            r["delta"] = mode.delta;
            pre[variant_name(mode.variant)] = r;
        }
        j["preconditions"] = pre;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "vertices " << g.vertex_count() << '\n'
        << "edges " << g.edge_count() << '\n'
        << "max_degree " << g.max_degree() << '\n'
        << "girth " << format_length(gp.girth) << '\n'
        << "odd_girth " << format_length(gp.odd_girth) << '\n'
        << "even_girth " << format_length(gp.even_girth) << '\n'
        << "mad " << m << '\n';
    for (const auto& mode : modes_for(g)) {
        const PreconditionReport r = check_preconditions(g, mode);
        out << "precondition " << variant_name(mode.variant) << " delta=" << mode.delta << ' '
            << (r.ok() ? "holds" : "fails");
        if (!r.ok()) out << " (" << r.first_violation() << ')';
        out << '\n';
    }
    return kExitOk;
}

int cmd_color(const std::string& file, int delta, const std::string& mode_name, bool strict, std::int64_t budget,
              bool as_json, std::ostream& out, std::ostream& err, std::istream& in) {
    const SimpleGraph g = load_graph(file, in);
    AlgorithmMode mode{parse_variant(mode_name), delta};
    validate_mode(mode);
    const SparseResult r = strong_color_sparse(g, mode, strict, budget);
    if (!r.coloring) {
        err << "reduction failed: " << r.failure->reason << '\n';
        write_graph(err, r.failure->stuck);
        if (as_json) out << json{{"ok", false}, {"reason", r.failure->reason}}.dump(2) << '\n';
        return kExitAlgorithmFailed;
    }
    if (as_json) {
        std::ostringstream col, tr;
        write_coloring(col, g, *r.coloring);
        write_trace(tr, r.trace);
        out << json{{"ok", true},
                    {"colors", r.coloring->colors_used()},
                    {"palette", r.coloring->palette},
                    {"steps", r.trace.steps.size()},
                    {"preconditions", report_json(r.preconditions)},
                    {"coloring", col.str()},
                    {"trace", tr.str()}}
                   .dump(2)
            << '\n';
        return kExitOk;
    }
    if (!r.preconditions.ok()) out << "# precondition fails: " << r.preconditions.first_violation() << '\n';
    write_coloring(out, g, *r.coloring);
    write_trace(out, r.trace);
    return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& coloring_file, bool as_json, std::ostream& out,
               std::istream& in) {
    if (file == "-" && coloring_file == "-") throw Failure{kExitInvalid, "only one input can come from stdin"};
    const SimpleGraph g = load_graph(file, in);
    std::istringstream cs(slurp(coloring_file, in));
    const StrongColoring c = read_coloring(cs, g);
    const VerifyResult v = verify_strong_coloring(g, c);
    if (as_json) {
        json bad = json::array();
        for (auto [i, j] : v.violations) {
            const Edge& a = g.edge(i);
            const Edge& b = g.edge(j);
            bad.push_back({{a.u, a.v}, {b.u, b.v}});
        }
        out << json{{"ok", v.ok}, {"colors", c.colors_used()}, {"violations", bad}}.dump(2) << '\n';
    } else if (v.ok) {
        out << "ok colors=" << c.colors_used() << '\n';
    } else {
        out << "invalid violations=" << v.violations.size() << '\n';
        for (auto [i, j] : v.violations) {
            const Edge& a = g.edge(i);
            const Edge& b = g.edge(j);
            out << "conflict " << a.u << '-' << a.v << ' ' << b.u << '-' << b.v << " color "
                << c.colors[static_cast<std::size_t>(i)] << '\n';
        }
    }
    return v.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_chis(const std::string& file, std::int64_t budget, bool as_json, std::ostream& out, std::istream& in) {
    const SimpleGraph g = load_graph(file, in);
    const ExactResult r = exact_strong_chromatic_index(g, budget);
    if (as_json) {
        std::ostringstream col;
        write_coloring(col, g, r.witness);
        out << json{{"exact", r.exact},
                    {"chi", r.colors},
                    {"lower_bound", r.lower_bound},
                    {"nodes", r.nodes},
                    {"witness", col.str()}}
                   .dump(2)
            << '\n';
    } else if (r.exact) {
        out << r.colors << '\n';
    } else {
        out << "budget exhausted: " << r.lower_bound << " <= chi <= " << r.colors << '\n';
    }
    return r.exact ? kExitOk : kExitAlgorithmFailed;
}

struct WalkArgs {
    int n = 3;
    std::string start, end, mode = "prescribed";
    int l1 = 0, l2 = 0, length = 0;
};

int cmd_walk(const WalkArgs& a, bool as_json, std::ostream& out) {
    WalkRequest req{parse_subset(a.n, a.start), parse_subset(a.n, a.end), a.l1, a.l2, a.length, WalkMode::prescribed};
    std::optional<SpecialWalk> w;
    if (a.mode == "prescribed") {
        w = construct_prescribed_walk(req);
    } else if (a.mode == "avoiding") {
        req.mode = WalkMode::avoiding;
        w = construct_avoiding_walk(req);
    } else if (a.mode == "dp") {
        w = dp_special_walk(req);
    } else {
        throw Failure{kExitInvalid, "unknown walk mode '" + a.mode + "'"};
    }
    if (!w) {
        if (as_json) out << json{{"found", false}}.dump(2) << '\n';
        else out << "none\n";
        return kExitAlgorithmFailed;
    }
    if (as_json) {
        json vs = json::array();
        for (const auto& v : w->vertices) vs.push_back(v.to_string());
        out << json{{"found", true}, {"n", w->n}, {"length", w->length()}, {"vertices", vs}, {"labels", w->labels}}.dump(2)
            << '\n';
    } else {
        write_walk(out, *w);
    }
    return kExitOk;
}

int cmd_oddgraph(int n, bool as_json, std::ostream& out) {
    const OddGraph og = odd_graph(n);
    if (as_json) {
        json vs = json::array();
        for (const auto& v : og.vertices) vs.push_back(v.to_string());
        json es = json::array();
        for (int i = 0; i < og.graph.edge_count(); ++i) {
            const Edge& e = og.graph.edge(i);
            es.push_back({e.u, e.v, edge_label(og.vertices[static_cast<std::size_t>(e.u)], og.vertices[static_cast<std::size_t>(e.v)])});
        }
        out << json{{"n", n}, {"vertices", vs}, {"edges", es}}.dump(2) << '\n';
        return kExitOk;
    }
    for (std::size_t i = 0; i < og.vertices.size(); ++i) out << "# vertex " << i << ' ' << og.vertices[i].to_string() << '\n';
    write_graph(out, og.graph);
    return kExitOk;
}

int print_table(const std::vector<SharpnessCheck>& checks, bool as_json, std::ostream& out) {
    bool all = true;
    json rows = json::array();
    for (const auto& c : checks) {
        all = all && c.passed;
        if (as_json) rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        else out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    }
    if (as_json) out << json{{"passed", all}, {"checks", rows}}.dump(2) << '\n';
    return all ? kExitOk : kExitVerifyFailed;
}

int cmd_repro_cw(int kappa, int delta, std::int64_t budget, bool as_json, std::ostream& out) {
    const SimpleGraph g = generators::caterpillar_cycle(kappa, delta);
    std::vector<SharpnessCheck> rows;
    const StrongColoring c = color_caterpillar_cycle(kappa, delta);
    const VerifyResult v = verify_strong_coloring(g, c);
    rows.push_back({"walk coloring is strong", v.ok, std::to_string(c.colors_used()) + " colors"});
    rows.push_back({"walk coloring uses 2Δ-1 colors", c.colors_used() <= 2 * delta - 1,
                    std::to_string(c.colors_used()) + " <= " + std::to_string(2 * delta - 1)});
    const ExactResult r = exact_strong_chromatic_index(g, budget);
    if (r.exact) {
        rows.push_back({"exact index equals 2Δ-1", r.colors == 2 * delta - 1, "exact " + std::to_string(r.colors)});
    } else {
        rows.push_back({"exact index equals 2Δ-1", false,
                        "budget exhausted at " + std::to_string(r.lower_bound) + ".." + std::to_string(r.colors)});
    }
    const Density m = mad(g);
    rows.push_back({"mad below 2 + 1/(3Δ-2)", m.less_than(6 * delta - 3, 3 * delta - 2), "mad " + m.to_string()});
    return print_table(rows, as_json, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Strong edge colorings of sparse graphs and special walks in odd graphs", "oddcolor"};
    app.require_subcommand(1, 1);
    bool as_json = false;
    int threads = 1;
    app.add_flag("--json", as_json, "Machine-readable output");
    app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    std::string file, coloring_file, mode_name = "high-girth";
    int delta = 4, n = 3, kappa = 6;
    bool strict = false;
    std::int64_t budget = kDefaultSolverBudget;
    WalkArgs walk;

    auto* inv = app.add_subcommand("invariants", "Degree, girth profile, mad and preconditions");
    inv->add_option("file", file, "Graph file or -")->required();

    auto* color = app.add_subcommand("color", "Strong (2Δ-1)-coloring with a reduction trace");
    color->add_option("file", file, "Graph file or -")->required();
    color->add_option("--delta", delta, "Degree bound Δ")->required();
    color->add_option("--mode", mode_name, "high-girth | subcubic-girth41 | mad-based | subcubic-mad");
    color->add_flag("--strict", strict, "Fail when a precondition does not hold");
    color->add_option("--budget", budget, "Exact solver node budget")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check a coloring");
    verify->add_option("file", file, "Graph file or -")->required();
    verify->add_option("coloring", coloring_file, "Coloring file or -")->required();

    auto* chis = app.add_subcommand("chis", "Exact strong chromatic index");
    chis->add_option("file", file, "Graph file or -")->required();
    chis->add_option("--budget", budget, "Node budget")->check(CLI::PositiveNumber);

    auto* wk = app.add_subcommand("walk", "Special walk in O_n");
    wk->add_option("--n", walk.n, "n of O_n")->required();
    wk->add_option("--start", walk.start, "Start subset, e.g. 1,2")->required();
    wk->add_option("--end", walk.end, "End subset")->required();
    wk->add_option("--l1", walk.l1, "First label")->required();
    wk->add_option("--l2", walk.l2, "Last label")->required();
    wk->add_option("--len", walk.length, "Walk length")->required();
    wk->add_option("--mode", walk.mode, "prescribed | avoiding | dp");

    auto* og = app.add_subcommand("oddgraph", "Export O_n");
    og->add_option("--n", n, "n of O_n")->required();

    auto* sharp = app.add_subcommand("repro-sharpness", "Length thresholds are tight");
    sharp->add_option("--n", n, "3 or 4")->required();

    auto* cw = app.add_subcommand("repro-cw", "Strong index of C_{κ,Δ}");
    cw->add_option("--kappa", kappa, "Cycle length κ")->required();
    cw->add_option("--delta", delta, "Δ")->required();
    cw->add_option("--budget", budget, "Node budget")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (inv->parsed()) return cmd_invariants(file, as_json, out, in);
        if (color->parsed()) return cmd_color(file, delta, mode_name, strict, budget, as_json, out, err, in);
        if (verify->parsed()) return cmd_verify(file, coloring_file, as_json, out, in);
        if (chis->parsed()) return cmd_chis(file, budget, as_json, out, in);
        if (wk->parsed()) return cmd_walk(walk, as_json, out);
        if (og->parsed()) return cmd_oddgraph(n, as_json, out);
        if (sharp->parsed()) return print_table(sharpness_audit(n).checks, as_json, out);
        if (cw->parsed()) return cmd_repro_cw(kappa, delta, budget, as_json, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitAlgorithmFailed;
    }
    return kExitInvalid;
}

}  // namespace oddcolor
