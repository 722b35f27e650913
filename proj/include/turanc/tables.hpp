#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turanc/constructions.hpp"
#include "turanc/enumerate.hpp"
#include "turanc/formula.hpp"

namespace turanc {

enum class RowKind { exact, lower_bound, asymptotic, report_only };

struct TableRow {
    std::string group;
    std::string tree;
    std::string formula;  ///< in n, see evaluate_formula
    int n_min = 1;
    std::optional<int> n_max;
    std::optional<std::pair<int, int>> n_mod;  ///< (modulus, residue): only n with n % modulus == residue
    RowKind kind = RowKind::exact;
    std::string construction;  ///< optional witness recipe, see build_table_witness
    std::string note;
};

std::string to_string(RowKind kind);

/// Reads the JSON manifest (schema "turanc.tables/1").
std::vector<TableRow> load_table_manifest(const std::string& path);
std::vector<TableRow> parse_table_manifest(const std::string& json_text);
/// Manifest shipped with the sources.
std::string default_manifest_path();

/// Witness recipes: a named_small name, "nearly_regular:<d>",
/// "complete_bipartite:<a>" (K_{a,n-a}), "complete" (K_n), or a tree-based
/// generator name (prop2_delta2, branch_construction, ...).
ConstructionResult build_table_witness(const std::string& recipe, const Tree& t, int n);

enum class CheckStatus { pass, fail, info };

std::string to_string(CheckStatus status);

struct RowCheck {
    std::size_t row = 0;  ///< index into the manifest
    std::string group;
    std::string tree;
    int n = 0;
    RowKind kind = RowKind::exact;
    Rational formula_value;
    std::int64_t oracle = 0;
    CheckStatus status = CheckStatus::info;
    std::string detail;
    /// Edge count of the recipe witness and whether it avoids T, when a recipe is given.
    std::optional<std::int64_t> witness_edges;
    std::optional<bool> witness_free;
};

/// Oracle versus formula for every row and every admissible n <= n_max.
/// exact rows pass on equality, lower_bound rows on oracle >= formula;
/// asymptotic and report_only rows are informational. A recipe witness that
/// contains T or misses the formula on exact/lower rows is a failure.
std::vector<RowCheck> verify_tables(const std::vector<TableRow>& rows, int n_max,
                                    const EnumerationOptions& options = {});

}  // namespace turanc
