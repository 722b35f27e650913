#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turanc/constructions.hpp"
#include "turanc/enumerate.hpp"
#include "turanc/formula.hpp"
#include "turanc/tree.hpp"

namespace turanc {

enum class BoundKind { lower, upper, exact };

std::string to_string(BoundKind kind);

/// One named bound on ex_c(n, T). `value` is the edge count of the built
/// witness when there is one; `formula_value` is the closed form as stated,
/// which may be weaker than (or differ from) the witness.
struct BoundEvaluation {
    std::string name;
    BoundKind kind = BoundKind::lower;
    std::optional<std::int64_t> value;  ///< absent means n/a
    std::string reason;                 ///< why the bound does not apply
    std::optional<std::int64_t> formula_value;
    std::optional<ConstructionResult> witness;
    std::string note;

    bool applies() const { return value.has_value(); }
};

/// Every bound in a fixed order: prop3_1 .. prop3_9 (with prop3_2_spider after
/// prop3_2), thm4, thm5_broom, thm2_path_upper, known_exact. Requires |T| >= 4.
std::vector<BoundEvaluation> evaluate_all_bounds(const Tree& t, int n);

/// Largest applicable lower-bound value (exact values count as lower bounds).
std::optional<std::int64_t> best_lower_bound(const std::vector<BoundEvaluation>& bounds);

/// Upper bound on edges of a connected n-vertex graph without a path on k + 1
/// vertices. Requires k >= 3 and n >= k.
std::int64_t kopylov_upper_path(int n, int k);

/// Exact ex_c(n, T) where a proven result covers (T, n). Families whose value
/// is only known for n large enough are reported when `oracle_value` (an
/// exhaustive result at this n) agrees with the formula.
std::optional<std::int64_t> known_exact(const Tree& t, int n, std::optional<std::int64_t> oracle_value = {});

/// 2 / (|T| - 2) * ex_c(n, T) / n at one finite n. Not an asymptotic statement.
struct GammaReport {
    std::string tree;
    int n = 0;
    std::int64_t exc = 0;
    std::string source;  ///< "known_exact" or "oracle"
    Rational ratio;
};

/// Ratios for n_lo <= n <= n_hi, using known_exact where available and the
/// exhaustive oracle otherwise (so orders above 9 need known values or allow_large).
std::vector<GammaReport> gamma_report(const Tree& t, int n_lo, int n_hi, const EnumerationOptions& options = {});

}  // namespace turanc
