#include "turanc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turanc/bounds.hpp"
#include "turanc/canonical.hpp"
#include "turanc/constructions.hpp"
#include "turanc/embedding.hpp"
#include "turanc/enumerate.hpp"
#include "turanc/error.hpp"
#include "turanc/tables.hpp"
#include "turanc/tree.hpp"

#ifndef TURANC_VERSION
#define TURANC_VERSION "0.0.0"
#endif

namespace turanc {

using nlohmann::json;
using nlohmann::ordered_json;

std::string library_version() { return TURANC_VERSION; }

namespace {

constexpr const char* kRunSchema = "turanc.run/1";

std::string trim(std::string s) {
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

std::string graph_text(const Graph& g) { return g.order() <= 62 ? to_graph6(g) : to_adjacency_text(g); }

Graph parse_graph_text(const std::string& text) {
    if (text.rfind("adj:", 0) == 0) return from_adjacency_text(text);
    if (text.rfind("g6:", 0) == 0) return from_graph6(text.substr(3));
    return from_graph6(text);
}

ordered_json params_json(const Tree& t) {
    const TreeParams p = tree_params(t);
    ordered_json j;
    j["tree"] = tree_to_string(t);
    j["order"] = t.order();
    j["ell"] = p.ell;
    j["p"] = p.p;
    j["max_deg"] = p.max_deg;
    j["min_deg"] = p.min_deg;
    j["nu"] = p.nu;
    j["delta2"] = p.delta2 ? ordered_json(*p.delta2) : ordered_json(nullptr);
    j["m"] = p.m;
    j["m2"] = p.m2;
    j["bipartition"] = {p.bipartition.first, p.bipartition.second};
    j["w"] = p.w;
    j["is_path"] = is_path(t);
    j["is_star"] = is_star(t);
    return j;
}

ordered_json construction_json(const ConstructionResult& r) {
    ordered_json j;
    j["name"] = r.name;
    j["n"] = r.graph.order();
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["claimed_edges"] = r.claimed_edges;
    j["actual_edges"] = r.graph.edge_count();
    j["formula_edges"] = r.formula_edges ? ordered_json(*r.formula_edges) : ordered_json(nullptr);
    j["graph6"] = graph_text(r.graph);
    return j;
}

// ---- ExcRecord cache ----------------------------------------------------------

std::string hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

std::optional<std::filesystem::path> cache_path(const Tree& t, int n) {
    const char* dir = std::getenv("TURANC_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir) /
           ("exc-" + hex(canonical_form(t.graph()).bytes()) + "-n" + std::to_string(n) + ".json");
}

ordered_json exc_json(const ExcRecord& r) {
    ordered_json j;
    j["tree"] = r.tree;
    j["n"] = r.n;
    j["max_edges"] = r.max_edges;
    j["extremal_count"] = r.extremal.size();
    ordered_json list = ordered_json::array();
    for (const auto& f : r.extremal) list.push_back(f.bytes());
    j["extremal"] = list;
    j["graphs_examined"] = r.graphs_examined;
    return j;
}

ExcRecord cached_exc(const Tree& t, int n, const EnumerationOptions& options) {
    const auto path = cache_path(t, n);
    if (path && std::filesystem::exists(*path)) {
        try {
            std::ifstream in(*path);
            const json j = json::parse(in);
            ExcRecord r;
            r.n = j.at("n").get<int>();
            r.tree = j.at("tree").get<std::string>();
            r.max_edges = j.at("max_edges").get<int>();
            for (const auto& s : j.at("extremal")) r.extremal.emplace_back(s.get<std::string>());
            r.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
            if (r.n == n && r.tree == tree_to_string(t)) return r;
        } catch (const std::exception&) {
            // Unreadable entries are recomputed and overwritten.
        }
    }
    ExcRecord res = exc_bruteforce(t, n, options);
    if (path) {
        std::error_code ec;
        std::filesystem::create_directories(path->parent_path(), ec);
        const auto tmp = path->string() + ".tmp";
        {
            std::ofstream o(tmp);
            o << exc_json(res).dump() << '\n';
        }
        std::filesystem::rename(tmp, *path, ec);
    }
    return res;
}

// ---- output --------------------------------------------------------------------

std::string scalar_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "n/a";
    return v.dump();
}

void print_text(const ordered_json& outputs, std::ostream& os) {
    for (const auto& [key, v] : outputs.items()) {
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << key << ":\n";
            for (const auto& row : v) {
                os << " ";
                for (const auto& [k2, v2] : row.items()) os << " " << k2 << "=" << scalar_text(v2);
                os << "\n";
            }
        } else if (v.is_array()) {
            os << key << ":";
            for (const auto& x : v) os << " " << scalar_text(x);
            os << "\n";
        } else if (v.is_object()) {
            os << key << ":";
            for (const auto& [k2, v2] : v.items()) os << " " << k2 << "=" << scalar_text(v2);
            os << "\n";
        } else {
            os << key << ": " << scalar_text(v) << "\n";
        }
    }
}

struct Global {
    bool json = false;
    std::string out;
    int workers = 1;
    bool allow_large = false;

    EnumerationOptions enumeration(std::ostream& err) const {
        EnumerationOptions o;
        o.workers = workers;
        o.allow_large = allow_large;
        if (allow_large) {
            o.progress = [&err](int n, std::size_t count) {
                if (n >= 9) err << "enumerated " << count << " graphs on " << n << " vertices\n";
            };
        }
        return o;
    }
};

struct Run {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json outputs = ordered_json::object();
    bool ok = true;
};

void emit(const Run& run, const Global& g, double elapsed_ms, std::ostream& out) {
    std::ostringstream text;
    if (g.json) {
        ordered_json report;
        report["schema"] = kRunSchema;
        report["command"] = run.command;
        report["version"] = library_version();
        report["inputs"] = run.inputs;
        report["outputs"] = run.outputs;
        report["ok"] = run.ok;
        report["timing"] = {{"elapsed_ms", elapsed_ms}};
        text << report.dump(2) << "\n";
    } else {
        print_text(run.outputs, text);
    }
    if (g.out.empty()) {
        out << text.str();
    } else {
        std::ofstream f(g.out);
        if (!f) throw Error("cannot write " + g.out);
        f << text.str();
    }
}

// ---- subcommands ---------------------------------------------------------------

Run cmd_params(const std::string& expr) {
    Run r{"params"};
    r.inputs["tree"] = expr;
    const Tree t = parse_tree(expr);
    if (t.order() < 2) throw Error("parameters need a tree with at least 2 vertices");
    r.outputs = params_json(t);
    return r;
}

struct ConstructArgs {
    std::string name;
    int n = 0;
    int block = 0;
    std::string tree;
    int k = 0;
    int s = 0;
    int a = 0;
    int b = 0;
    int d = -1;
};

ConstructionResult build_named(const ConstructArgs& c) {
    auto need_tree = [&] {
        if (c.tree.empty()) throw Error(c.name + " needs --tree");
        return parse_tree(c.tree);
    };
    if (c.name == "kopylov") return kopylov(c.n, c.k, c.s);
    if (c.name == "prop2_longest_path") return prop2_longest_path(need_tree(), c.n);
    if (c.name == "prop2_induced_path") return prop2_induced_path(need_tree(), c.n);
    if (c.name == "prop2_induced_path_spider") return prop2_induced_path_spider(need_tree(), c.n);
    if (c.name == "nearly_regular") return nearly_regular(c.n, c.d);
    if (c.name == "clique_join_empty") return clique_join_empty(c.a, c.n);
    if (c.name == "prop2_delta2") return prop2_delta2(need_tree(), c.n);
    if (c.name == "complete_bipartite") return complete_bipartite(c.a, c.b);
    if (c.name == "branch_construction") return branch_construction(need_tree(), c.n);
    if (c.name == "cycle_of_cliques") return cycle_of_cliques(c.n, c.block);
    if (c.name == "path_of_cliques") return path_of_cliques(c.n, c.block);
    return named_small(c.name, c.n);
}

Run cmd_construct(const ConstructArgs& c) {
    Run r{"construct"};
    r.inputs = {{"name", c.name}, {"n", c.n}};
    if (c.block) r.inputs["block"] = c.block;
    if (!c.tree.empty()) r.inputs["tree"] = c.tree;
    if (c.k) r.inputs["k"] = c.k;
    if (c.s) r.inputs["s"] = c.s;
    if (c.a) r.inputs["a"] = c.a;
    if (c.b) r.inputs["b"] = c.b;
    if (c.d >= 0) r.inputs["d"] = c.d;
    const ConstructionResult res = build_named(c);
    r.outputs = construction_json(res);
    r.outputs["connected"] = is_connected(res.graph);
    if (!c.tree.empty()) r.outputs["tree_free"] = !contains_tree(res.graph, parse_tree(c.tree));
    return r;
}

Run cmd_check(const std::string& host_spec, const std::string& expr) {
    Run r{"check"};
    r.inputs = {{"host", host_spec}, {"tree", expr}};
    const Graph host = parse_host(host_spec);
    const Tree t = parse_tree(expr);
    const auto e = find_embedding(host, t);
    r.outputs["host_graph6"] = graph_text(host);
    r.outputs["host_order"] = host.order();
    r.outputs["host_edges"] = host.edge_count();
    r.outputs["contains"] = e.has_value();
    r.outputs["witness"] = e ? ordered_json(e->image) : ordered_json(nullptr);
    return r;
}

Run cmd_exc(const std::string& expr, int n, const std::string& extremal_out, const EnumerationOptions& options) {
    Run r{"exc"};
    r.inputs = {{"tree", expr}, {"n", n}};
    const Tree t = parse_tree(expr);
    const ExcRecord res = cached_exc(t, n, options);
    r.outputs = exc_json(res);
    if (!extremal_out.empty()) {
        std::ofstream f(extremal_out);
        if (!f) throw Error("cannot write " + extremal_out);
        for (const auto& form : res.extremal) f << form.bytes() << "\n";
    }
    return r;
}

Run cmd_bounds(const std::string& expr, int n, bool use_oracle, const EnumerationOptions& options) {
    Run r{"bounds"};
    r.inputs = {{"tree", expr}, {"n", n}};
    const Tree t = parse_tree(expr);
    const auto bounds = evaluate_all_bounds(t, n);
    std::optional<std::int64_t> oracle;
    const int limit = options.allow_large ? kMaxEnumerationOrder : kDefaultEnumerationLimit;
    if (use_oracle && n <= limit) oracle = cached_exc(t, n, options).max_edges;

    ordered_json rows = ordered_json::array();
    for (const auto& b : bounds) {
        ordered_json row;
        row["name"] = b.name;
        row["kind"] = to_string(b.kind);
        row["value"] = b.value ? ordered_json(*b.value) : ordered_json(nullptr);
        row["formula_value"] = b.formula_value ? ordered_json(*b.formula_value) : ordered_json(nullptr);
        row["witness_graph6"] = b.witness ? ordered_json(graph_text(b.witness->graph)) : ordered_json(nullptr);
        if (b.witness) {
            const bool free = !contains_tree(b.witness->graph, t);
            row["witness_free"] = free;
            r.ok = r.ok && free;
        }
        row["gap"] = oracle && b.value ? ordered_json(*oracle - *b.value) : ordered_json(nullptr);
        if (!b.reason.empty()) row["reason"] = b.reason;
        if (!b.note.empty()) row["note"] = b.note;
        if (oracle && b.value) {
            const bool consistent = b.kind == BoundKind::lower   ? *b.value <= *oracle
                                    : b.kind == BoundKind::upper ? *b.value >= *oracle
                                                                 : *b.value == *oracle;
            row["consistent"] = consistent;
            r.ok = r.ok && consistent;
        }
        rows.push_back(row);
    }
    r.outputs["tree"] = tree_to_string(t);
    r.outputs["n"] = n;
    r.outputs["oracle"] = oracle ? ordered_json(*oracle) : ordered_json(nullptr);
    const auto best = best_lower_bound(bounds);
    r.outputs["best_lower_bound"] = best ? ordered_json(*best) : ordered_json(nullptr);
    r.outputs["erdos_sos_benchmark"] = Rational(std::int64_t{t.order() - 2} * n, 2).to_string();
    r.outputs["bounds"] = rows;
    return r;
}

Run cmd_scan(const std::string& expr, int n_max, const EnumerationOptions& options) {
    Run r{"scan"};
    r.inputs = {{"tree", expr}, {"n_max", n_max}};
    const Tree t = parse_tree(expr);
    ordered_json pts = ordered_json::array();
    bool any = false;
    for (const auto& p : monotonicity_scan(t, n_max, options)) {
        pts.push_back({{"n", p.n}, {"max_edges", p.max_edges}, {"violates", p.violates}});
        any = any || p.violates;
    }
    r.outputs["tree"] = tree_to_string(t);
    r.outputs["points"] = pts;
    r.outputs["monotone"] = !any;
    return r;
}

Run cmd_gamma(const std::string& expr, int n_lo, int n_hi, const EnumerationOptions& options) {
    Run r{"gamma"};
    r.inputs = {{"tree", expr}, {"n_min", n_lo}, {"n_max", n_hi}};
    const Tree t = parse_tree(expr);
    ordered_json pts = ordered_json::array();
    for (const auto& g : gamma_report(t, n_lo, n_hi, options)) {
        pts.push_back({{"n", g.n},
                       {"exc", g.exc},
                       {"source", g.source},
                       {"ratio", g.ratio.to_string()},
                       {"ratio_approx", std::round(g.ratio.to_double() * 1e6) / 1e6}});
    }
    r.outputs["tree"] = tree_to_string(t);
    r.outputs["note"] = "finite-n ratios only; no limit is asserted";
    r.outputs["points"] = pts;
    return r;
}

Run cmd_verify_tables(int n_max, const std::string& manifest, const EnumerationOptions& options) {
    Run r{"verify-tables"};
    const std::string path = manifest.empty() ? default_manifest_path() : manifest;
    r.inputs = {{"n_max", n_max}, {"manifest", std::filesystem::path(path).filename().string()}};
    const auto rows = load_table_manifest(path);
    ordered_json checks = ordered_json::array();
    int pass = 0, fail = 0, info = 0;
    for (const auto& c : verify_tables(rows, n_max, options)) {
        ordered_json j;
        j["status"] = to_string(c.status);
        j["group"] = c.group;
        j["tree"] = c.tree;
        j["n"] = c.n;
        j["kind"] = to_string(c.kind);
        j["formula"] = rows[c.row].formula;
        j["formula_value"] = c.formula_value.to_string();
        j["oracle"] = c.oracle;
        j["detail"] = c.detail;
        if (c.witness_edges) {
            j["witness_edges"] = *c.witness_edges;
            j["witness_free"] = *c.witness_free;
        }
        checks.push_back(j);
        (c.status == CheckStatus::pass ? pass : c.status == CheckStatus::fail ? fail : info) += 1;
    }
    r.outputs["summary"] = {{"pass", pass}, {"fail", fail}, {"info", info}};
    r.outputs["checks"] = checks;
    r.ok = fail == 0;
    return r;
}

}  // namespace

Graph parse_host(const std::string& spec) {
    if (spec.rfind("g6:", 0) == 0) return from_graph6(spec.substr(3));
    if (spec.rfind("adj:", 0) == 0) return from_adjacency_text(spec);
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw Error("cannot open " + spec.substr(1));
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (!line.empty()) return parse_graph_text(line);
        }
        throw Error("no graph in " + spec.substr(1));
    }
    const auto colon = spec.rfind(':');
    if (colon != std::string::npos) {
        int n = 0;
        try {
            n = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw Error("bad host order in '" + spec + "'");
        }
        return named_small(spec.substr(0, colon), n).graph;
    }
    throw Error("host must be g6:<graph6>, adj:<...>, @<file> or <construction>:<n>, got '" + spec + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Connected Turán numbers of trees: parameters, constructions, bounds and an exhaustive oracle",
                 "turanc"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", library_version());

    Global g;
    app.add_flag("--json", g.json, "Print a JSON run report");
    app.add_option("--out", g.out, "Write output to this file");
    app.add_option("--workers", g.workers, "Worker threads for enumeration")->check(CLI::Range(1, 256));
    app.add_flag("--allow-large", g.allow_large, "Permit n = 10 enumeration (minutes, ~100 MB)");

    std::string tree_expr;
    int n = 0;

    auto* params = app.add_subcommand("params", "Tree parameters");
    params->add_option("tree", tree_expr, "Tree expression")->required();

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "Build a lower-bound construction");
    construct->add_option("name", cargs.name, "Construction name")->required();
    construct->add_option("--n", cargs.n, "Number of vertices")->required();
    construct->add_option("--block", cargs.block, "Block size (cycle/path of cliques)");
    construct->add_option("--tree", cargs.tree, "Tree for tree-driven constructions");
    construct->add_option("--k", cargs.k, "kopylov: k");
    construct->add_option("--s", cargs.s, "kopylov: s");
    construct->add_option("--a", cargs.a, "clique size / first part");
    construct->add_option("--b", cargs.b, "second part");
    construct->add_option("--d", cargs.d, "nearly_regular: degree");

    std::string host;
    auto* check = app.add_subcommand("check", "Does the host contain the tree?");
    check->add_option("--host", host, "g6:<graph6> | adj:<...> | @file | <construction>:<n>")->required();
    check->add_option("tree", tree_expr, "Tree expression")->required();

    std::string extremal_out;
    auto* exc = app.add_subcommand("exc", "Exhaustive ex_c(n, T)");
    exc->add_option("tree", tree_expr, "Tree expression")->required();
    exc->add_option("n", n, "Number of vertices")->required();
    exc->add_option("--extremal-out", extremal_out, "Write extremal graphs (graph6 lines) here");

    bool no_oracle = false;
    auto* bounds = app.add_subcommand("bounds", "Every lower bound, with the oracle value when affordable");
    bounds->add_option("tree", tree_expr, "Tree expression")->required();
    bounds->add_option("n", n, "Number of vertices")->required();
    bounds->add_flag("--no-oracle", no_oracle, "Skip the exhaustive oracle");

    int n_max = 9;
    auto* scan = app.add_subcommand("scan", "ex_c(n, T) from |T| - 1 to n_max, flagging monotonicity failures");
    scan->add_option("tree", tree_expr, "Tree expression")->required();
    scan->add_option("--n-max", n_max, "Largest n");

    int n_min = 1;
    auto* gamma = app.add_subcommand("gamma", "Finite-n normalised ratios 2 ex_c(n,T) / ((|T|-2) n)");
    gamma->add_option("tree", tree_expr, "Tree expression")->required();
    gamma->add_option("--n-min", n_min, "Smallest n");
    gamma->add_option("--n-max", n_max, "Largest n");

    std::string manifest;
    auto* verify = app.add_subcommand("verify-tables", "Check the table manifest against the oracle");
    verify->add_option("--n-max", n_max, "Largest n");
    verify->add_option("--manifest", manifest, "Manifest path (defaults to the shipped tables.json)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const EnumerationOptions options = g.enumeration(err);
        Run run;
        if (params->parsed()) {
            run = cmd_params(tree_expr);
        } else if (construct->parsed()) {
            run = cmd_construct(cargs);
        } else if (check->parsed()) {
            run = cmd_check(host, tree_expr);
        } else if (exc->parsed()) {
            run = cmd_exc(tree_expr, n, extremal_out, options);
        } else if (bounds->parsed()) {
            run = cmd_bounds(tree_expr, n, !no_oracle, options);
        } else if (scan->parsed()) {
            run = cmd_scan(tree_expr, n_max, options);
        } else if (gamma->parsed()) {
            run = cmd_gamma(tree_expr, n_min, n_max, options);
        } else {
            run = cmd_verify_tables(n_max, manifest, options);
        }
        const double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(run, g, std::round(elapsed * 1000) / 1000, out);
        return run.ok ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace turanc
