#include "turanc/tables.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "turanc/embedding.hpp"
#include "turanc/error.hpp"

#ifndef TURANC_DATA_DIR
#define TURANC_DATA_DIR "data"
#endif

namespace turanc {

using nlohmann::json;

std::string to_string(RowKind kind) {
    switch (kind) {
        case RowKind::exact: return "exact";
        case RowKind::lower_bound: return "lower_bound";
        case RowKind::asymptotic: return "asymptotic";
        case RowKind::report_only: return "report_only";
    }
    return "exact";
}

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::info: return "INFO";
    }
    return "INFO";
}

namespace {

RowKind parse_kind(const std::string& s) {
    if (s == "exact") return RowKind::exact;
    if (s == "lower_bound") return RowKind::lower_bound;
    if (s == "asymptotic") return RowKind::asymptotic;
    if (s == "report_only") return RowKind::report_only;
    throw Error("unknown row kind '" + s + "'");
}

}  // namespace

std::vector<TableRow> parse_table_manifest(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("manifest is not valid JSON: ") + e.what(), e.byte);
    }
    if (doc.value("schema", "") != "turanc.tables/1") throw Error("manifest schema must be turanc.tables/1");
    std::vector<TableRow> rows;
    try {
        for (const auto& r : doc.at("rows")) {
            TableRow row;
            row.group = r.at("group").get<std::string>();
            row.tree = r.at("tree").get<std::string>();
            row.formula = r.at("formula").get<std::string>();
            row.n_min = r.at("n_min").get<int>();
            if (r.contains("n_max")) row.n_max = r.at("n_max").get<int>();
            if (r.contains("n_mod")) row.n_mod = std::pair{r.at("n_mod").at(0).get<int>(), r.at("n_mod").at(1).get<int>()};
            row.kind = parse_kind(r.at("kind").get<std::string>());
            row.construction = r.value("construction", "");
            row.note = r.value("note", "");
            if (row.n_mod && row.n_mod->first <= 0) throw Error("n_mod modulus must be positive");
            rows.push_back(std::move(row));
        }
    } catch (const json::exception& e) {
        throw Error(std::string("malformed manifest row: ") + e.what());
    }
    return rows;
}

std::vector<TableRow> load_table_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_table_manifest(ss.str());
}

std::string default_manifest_path() { return std::string(TURANC_DATA_DIR) + "/tables.json"; }

ConstructionResult build_table_witness(const std::string& recipe, const Tree& t, int n) {
    const auto colon = recipe.find(':');
    const std::string head = recipe.substr(0, colon);
    const int arg = colon == std::string::npos ? 0 : std::stoi(recipe.substr(colon + 1));
    if (head == "nearly_regular") return nearly_regular(n, arg);
    if (head == "complete_bipartite") return complete_bipartite(arg, n - arg);
    if (head == "complete") {
        ConstructionResult r{complete_graph(n), "complete", binom2(n), std::nullopt, {{"n", n}}};
        return r;
    }
    if (head == "prop2_delta2") return prop2_delta2(t, n);
    if (head == "prop2_longest_path") return prop2_longest_path(t, n);
    if (head == "branch_construction") return branch_construction(t, n);
    return named_small(recipe, n);
}

std::vector<RowCheck> verify_tables(const std::vector<TableRow>& rows, int n_max, const EnumerationOptions& options) {
    std::map<std::pair<std::string, int>, std::int64_t> memo;
    std::vector<RowCheck> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TableRow& row = rows[i];
        const Tree t = parse_tree(row.tree);
        const int hi = std::min(n_max, row.n_max.value_or(n_max));
        for (int n = std::max(1, row.n_min); n <= hi; ++n) {
            if (row.n_mod && n % row.n_mod->first != row.n_mod->second) continue;
            RowCheck c;
            c.row = i;
            c.group = row.group;
            c.tree = row.tree;
            c.n = n;
            c.kind = row.kind;
            c.formula_value = evaluate_formula(row.formula, {{"n", n}});
            const auto key = std::pair{tree_to_string(t), n};
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, exc_bruteforce(t, n, options).max_edges).first;
            c.oracle = it->second;

            const Rational oracle(c.oracle);
            switch (row.kind) {
                case RowKind::exact:
                    c.status = oracle == c.formula_value ? CheckStatus::pass : CheckStatus::fail;
                    c.detail = oracle == c.formula_value ? "equal" : "oracle differs from formula";
                    break;
                case RowKind::lower_bound:
                    c.status = oracle >= c.formula_value ? CheckStatus::pass : CheckStatus::fail;
                    c.detail = oracle == c.formula_value ? "equal" : oracle > c.formula_value ? "strict" : "bound exceeds oracle";
                    break;
                case RowKind::asymptotic:
                case RowKind::report_only:
                    c.status = CheckStatus::info;
                    c.detail = oracle == c.formula_value ? "equal" : oracle > c.formula_value ? "above" : "below";
                    break;
            }

            if (!row.construction.empty()) {
                try {
                    const ConstructionResult w = build_table_witness(row.construction, t, n);
                    c.witness_edges = w.graph.edge_count();
                    c.witness_free = !contains_tree(w.graph, t);
                    const bool checked = row.kind == RowKind::exact || row.kind == RowKind::lower_bound;
                    if (checked && (!*c.witness_free || Rational(*c.witness_edges) < c.formula_value)) {
                        c.status = CheckStatus::fail;
                        c.detail += *c.witness_free ? "; witness below formula" : "; witness contains the tree";
                    }
                } catch (const Error& e) {
                    c.detail += std::string("; no witness: ") + e.what();
                }
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace turanc
