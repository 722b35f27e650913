#include "turanc/bounds.hpp"

#include <algorithm>
#include <functional>

#include "turanc/canonical.hpp"
#include "turanc/error.hpp"

namespace turanc {

namespace {

BoundEvaluation not_applicable(std::string name, std::string reason, BoundKind kind = BoundKind::lower) {
    BoundEvaluation b;
    b.name = std::move(name);
    b.kind = kind;
    b.reason = std::move(reason);
    return b;
}

// Runs a generator; precondition failures become n/a entries.
BoundEvaluation from_witness(std::string name, const std::function<ConstructionResult()>& build,
                             std::optional<std::int64_t> formula) {
    try {
        ConstructionResult r = build();
        BoundEvaluation b;
        b.name = std::move(name);
        b.value = r.claimed_edges;
        b.formula_value = formula ? formula : r.formula_edges;
        b.witness = std::move(r);
        return b;
    } catch (const Error& e) {
        return not_applicable(std::move(name), e.what());
    }
}

bool same_tree(const Tree& t, const char* expr) { return isomorphic(t.graph(), parse_tree(expr).graph()); }

}  // namespace

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        case BoundKind::exact: return "exact";
    }
    return "lower";
}

std::int64_t kopylov_upper_path(int n, int k) {
    if (k < 3 || n < k) throw Error("kopylov_upper_path needs k >= 3 and n >= k");
    const std::int64_t first = binom2(k - 1) + n - k + 1;
    const std::int64_t half = (k + 2) / 2;  // ceil((k + 1) / 2)
    const std::int64_t second = binom2(half) + std::int64_t{(k - 1) / 2} * (n - half);
    return std::max(first, second);
}

std::optional<std::int64_t> known_exact(const Tree& t, int n, std::optional<std::int64_t> oracle_value) {
    const int k = t.order();
    if (n < 1) return std::nullopt;
    if (n < k) return binom2(n);  // K_n is too small to hold T
    if (is_path(t)) {
        if (k < 4) return std::nullopt;
        return kopylov_upper_path(n, k - 1);
    }
    const TreeParams tp = tree_params(t);
    if (is_star(t)) return std::int64_t{n} * (k - 2) / 2;
    if (const auto broom = broom_shape(t)) {
        const auto [bk, a] = *broom;
        if (a == 3) return std::int64_t{n} * (tp.max_deg - 1) / 2;
        if (bk == 6 && a == 4) return n == 6 ? 9 : std::int64_t{3} * (n - 1) / 2;
        // Only known for n large enough: accept a value the oracle has confirmed.
        std::optional<std::int64_t> eventual;
        if (a == 4 && tp.max_deg >= 4) eventual = std::int64_t{n} * (tp.max_deg - 1) / 2;
        if (3 * a <= bk) eventual = std::int64_t{bk - a} * n / 2;
        if (eventual && oracle_value == eventual) return eventual;
        return std::nullopt;
    }
    if (same_tree(t, "D(2,2)")) return 2 * std::int64_t{n} - 4;
    if (same_tree(t, "S(2,2,1)")) return 2 * std::int64_t{n} - 3;
    if (same_tree(t, "S(2,2,2)")) return 2 * std::int64_t{n} - 2;
    if (same_tree(t, "Dstar22")) return 2 * std::int64_t{n} - 3;
    // The stated 2n - 3 fails at n = 7 (K_5 with two pendant edges at one vertex has 12).
    if (same_tree(t, "S(3,2,1)") && n >= 8) return 2 * std::int64_t{n} - 3;
    return std::nullopt;
}

std::vector<BoundEvaluation> evaluate_all_bounds(const Tree& t, int n) {
    const int k = t.order();
    if (k < 4) throw Error("bounds need a tree with at least 4 vertices");
    if (n < 1 || n > kMaxVertices) throw Error("n must lie in 1..64");
    const TreeParams tp = tree_params(t);
    std::vector<BoundEvaluation> out;

    out.push_back(from_witness("prop3_1", [&] { return prop2_longest_path(t, n); }, std::nullopt));

    {
        auto b = from_witness("prop3_2", [&] { return prop2_induced_path(t, n); }, std::nullopt);
        if (b.applies()) b.note = "formula_value is the closed form as stated; value counts the built ring";
        out.push_back(std::move(b));
    }
    {
        auto b = from_witness("prop3_2_spider", [&] { return prop2_induced_path_spider(t, n); }, std::nullopt);
        if (b.applies()) {
            const auto& pr = b.witness->params;
            b.note = "edges grow at rate " +
                     Rational(pr.at("rate_numerator"), pr.at("rate_denominator")).to_string() + " per vertex";
        }
        out.push_back(std::move(b));
    }

    out.push_back(from_witness("prop3_3", [&] { return nearly_regular(n, tp.max_deg - 1); },
                               std::int64_t{n} * (tp.max_deg - 1) / 2));

    {
        const int a = tp.nu - 1;
        out.push_back(from_witness("prop3_4", [&] { return clique_join_empty(a, n); },
                                   std::int64_t{a} * (n - a) + binom2(a)));
    }

    out.push_back(from_witness("prop3_5", [&] { return prop2_delta2(t, n); }, std::nullopt));

    {
        const int a = tp.bipartition.first;
        out.push_back(from_witness(
            "prop3_6", [&] { return complete_bipartite(a - 1, n - a + 1); }, std::int64_t{a - 1} * (n - a + 1)));
    }

    out.push_back(from_witness("prop3_7", [&] { return branch_construction(t, n); }, std::nullopt));

    {
        const int block = k - tp.m2;
        auto b = from_witness("prop3_8", [&] { return cycle_of_cliques(n, block); }, std::nullopt);
        if (!b.applies() && block < 2) b.reason = "|T| - m2(T) = " + std::to_string(block) + " < 2";
        out.push_back(std::move(b));
    }

    {
        const int w = tp.w;
        out.push_back(from_witness(
            "prop3_9", [&] { return complete_bipartite(w - 1, n - w + 1); }, std::int64_t{w - 1} * (n - w + 1)));
    }

    {
        const std::int64_t formula = std::int64_t{k / 6} * n;
        if (is_path(t)) {
            out.push_back(not_applicable("thm4", "paths are covered exactly by the path bound"));
        } else if (tp.m > k / 3) {
            auto b = from_witness("thm4", [&] { return branch_construction(t, n); }, formula);
            b.note = "case m(T) > floor(k/3): branch construction";
            out.push_back(std::move(b));
        } else {
            auto b = from_witness("thm4", [&] { return path_of_cliques(n, k / 3); }, formula);
            b.note = "case m(T) <= floor(k/3): path of cliques of size floor(k/3)";
            out.push_back(std::move(b));
        }
    }

    if (const auto broom = broom_shape(t)) {
        const auto [bk, a] = *broom;
        const std::int64_t h = (a - 1) / 2;
        const std::int64_t formula = std::max(std::int64_t{bk - a} * n / 2, h * (n - h));
        auto named = [&](const char* name) -> const BoundEvaluation& {
            return *std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.name == name; });
        };
        const BoundEvaluation& by_degree = named("prop3_3");
        const BoundEvaluation& by_path = named("prop3_1");
        const bool path_wins = h * (n - h) > std::int64_t{bk - a} * n / 2 && by_path.applies();
        BoundEvaluation b = path_wins ? by_path : by_degree;
        b.name = "thm5_broom";
        b.formula_value = formula;
        b.note = path_wins ? "second branch wins; witness is the longest-path construction"
                           : "first branch wins; witness is the nearly regular graph";
        if (!b.applies()) b.reason = "no witness: " + b.reason;
        out.push_back(std::move(b));
    } else {
        out.push_back(not_applicable("thm5_broom", "T is not a broom"));
    }

    if (is_path(t)) {
        if (n >= k) {
            BoundEvaluation b;
            b.name = "thm2_path_upper";
            b.kind = BoundKind::upper;
            b.value = kopylov_upper_path(n, k - 1);
            b.formula_value = b.value;
            out.push_back(std::move(b));
        } else {
            out.push_back(not_applicable("thm2_path_upper", "needs n >= |T|; below that K_n itself is path-free",
                                         BoundKind::upper));
        }
    } else {
        out.push_back(not_applicable("thm2_path_upper", "T is not a path", BoundKind::upper));
    }

    if (const auto exact = known_exact(t, n)) {
        BoundEvaluation b;
        b.name = "known_exact";
        b.kind = BoundKind::exact;
        b.value = exact;
        b.formula_value = exact;
        out.push_back(std::move(b));
    } else {
        out.push_back(not_applicable("known_exact", "no proven exact value covers this (T, n)", BoundKind::exact));
    }
    return out;
}

std::optional<std::int64_t> best_lower_bound(const std::vector<BoundEvaluation>& bounds) {
    std::optional<std::int64_t> best;
    for (const auto& b : bounds) {
        if (b.kind == BoundKind::upper || !b.applies()) continue;
        if (!best || *b.value > *best) best = b.value;
    }
    return best;
}

std::vector<GammaReport> gamma_report(const Tree& t, int n_lo, int n_hi, const EnumerationOptions& options) {
    if (t.order() < 4) throw Error("gamma report needs a tree with at least 4 vertices");
    std::vector<GammaReport> out;
    for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
        GammaReport r;
        r.tree = tree_to_string(t);
        r.n = n;
        if (const auto exact = known_exact(t, n)) {
            r.exc = *exact;
            r.source = "known_exact";
        } else {
            r.exc = exc_bruteforce(t, n, options).max_edges;
            r.source = "oracle";
        }
        r.ratio = Rational(2 * r.exc, std::int64_t{t.order() - 2} * n);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace turanc
