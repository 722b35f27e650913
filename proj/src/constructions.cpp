#include "turanc/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "turanc/error.hpp"

namespace turanc {

namespace {

using Params = std::map<std::string, std::int64_t>;

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(what);
}

void require_order(int n) {
    require(n >= 1 && n <= kMaxVertices,
            "n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
}

ConstructionResult finish(const Graph& g, std::string name, std::int64_t claimed,
                          std::optional<std::int64_t> formula, Params params) {
    if (!is_connected(g)) throw Error("internal error: " + name + " built a disconnected graph");
    if (g.edge_count() != claimed) {
        throw Error("internal error: " + name + " built " + std::to_string(g.edge_count()) +
                    " edges, expected " + std::to_string(claimed));
    }
    return {g, std::move(name), claimed, formula, std::move(params)};
}

std::vector<int> take(int& next, int count) {
    std::vector<int> vs(count);
    std::iota(vs.begin(), vs.end(), next);
    next += count;
    return vs;
}

struct Unit {
    int in;
    int out;
};

// Cliques of size `block` plus a leftover clique; gates are the two lowest
// vertices (one gate for a single leftover vertex).
std::vector<Unit> clique_units(GraphBuilder& b, int n, int block) {
    std::vector<Unit> units;
    int next = 0;
    while (next < n) {
        const int size = std::min(block, n - next);
        const auto vs = take(next, size);
        b.add_clique(vs);
        units.push_back({vs[0], size > 1 ? vs[1] : vs[0]});
    }
    return units;
}

int count_at_least(const Tree& t, int d) {
    int c = 0;
    for (int v = 0; v < t.order(); ++v) c += t.degree(v) >= d ? 1 : 0;
    return c;
}

}  // namespace

std::int64_t binom2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

ConstructionResult kopylov(int n, int k, int s) {
    require_order(n);
    require(s >= 1 && k > 2 * s, "kopylov needs k > 2s >= 2");
    require(n >= k - s, "kopylov needs n >= k - s");
    GraphBuilder b(n);
    std::vector<int> core(k - s);
    std::iota(core.begin(), core.end(), 0);
    b.add_clique(core);
    for (int y = k - 2 * s; y < k - s; ++y) {
        for (int z = k - s; z < n; ++z) b.add_edge(y, z);
    }
    const std::int64_t claimed = binom2(k - s) + std::int64_t{s} * (n - k + s);
    return finish(b.build(), "kopylov", claimed, std::nullopt, {{"n", n}, {"k", k}, {"s", s}});
}

ConstructionResult prop2_longest_path(const Tree& t, int n) {
    const int ell = tree_params(t).ell;
    require(ell >= 4, "longest-path construction needs ell(T) >= 4, got " + std::to_string(ell));
    const int half = (ell + 1) / 2;
    require(n >= half, "longest-path construction needs n >= ceil(ell/2) = " + std::to_string(half));
    auto r = kopylov(n, ell - 1, (ell - 2) / 2);
    r.name = "prop2_longest_path";
    r.formula_edges = binom2(half) + std::int64_t{(ell - 2) / 2} * (n - half);
    r.params["ell"] = ell;
    return r;
}

ConstructionResult prop2_induced_path(const Tree& t, int n) {
    require_order(n);
    const int k = t.order();
    const int p = tree_params(t).p;
    const int clique = k - 2 * p - 3;
    require(clique >= 1, "induced-path construction needs |T| - 2p(T) - 3 >= 1, got " + std::to_string(clique));
    const int blocks = n / (k - p - 1);
    require(blocks >= 1, "induced-path construction needs n >= |T| - p(T) - 1 = " + std::to_string(k - p - 1));

    GraphBuilder b(n);
    int next = 0;
    std::vector<int> gate(blocks);
    for (int i = 0; i < blocks; ++i) {
        const auto vs = take(next, clique);
        b.add_clique(vs);
        gate[i] = vs[0];
    }
    for (int i = 0; i < blocks; ++i) {
        auto path = take(next, i + 1 < blocks ? p + 1 : n - next);
        path.insert(path.begin(), gate[i]);
        path.push_back(gate[(i + 1) % blocks]);
        b.add_path(path);
    }
    const Graph g = b.build();
    const std::int64_t formula = (binom2(clique) + p + 2) * (n / (k - p - 2));
    return finish(g, "prop2_induced_path", g.edge_count(), formula,
                  {{"n", n}, {"k", k}, {"p", p}, {"clique", clique}, {"blocks", blocks}});
}

ConstructionResult prop2_induced_path_spider(const Tree& t, int n) {
    require_order(n);
    require(count_at_least(t, 3) >= 2, "spider induced-path construction needs two vertices of degree >= 3");
    require(n >= 2, "spider induced-path construction needs n >= 2");
    const int k = t.order();
    const int p = tree_params(t).p;
    const int clique = k - p - 1;
    require(clique >= 1, "spider induced-path construction needs |T| - p(T) - 1 >= 1");
    const int blocks = (n - 1 + k - 1) / k;

    GraphBuilder b(n);
    int next = 1;
    for (int i = 0; i < blocks; ++i) {
        const int size = std::min(k, n - next);
        const int leg = std::min(size, p + 1);
        auto path = take(next, leg);
        path.insert(path.begin(), 0);
        b.add_path(path);
        if (size > leg) {
            const auto vs = take(next, size - leg);
            b.add_clique(vs);
            b.add_edge(path.back(), vs[0]);
        }
    }
    const Graph g = b.build();
    return finish(g, "prop2_induced_path_spider", g.edge_count(), std::nullopt,
                  {{"n", n},
                   {"k", k},
                   {"p", p},
                   {"blocks", blocks},
                   {"rate_numerator", binom2(clique) + p + 2},
                   {"rate_denominator", k}});
}

ConstructionResult nearly_regular(int n, int d) {
    require_order(n);
    require(d >= 0 && d < n, "nearly_regular needs 0 <= d < n");
    require(d != 0 || n == 1, "no connected 0-regular graph on more than one vertex");
    require(d != 1 || n == 2, "no connected graph with maximum degree 1 on " + std::to_string(n) + " vertices");
    GraphBuilder b(n);
    const int even = d % 2 == 0 ? d : d - 1;
    for (int i = 0; i < n; ++i) {
        for (int off = 1; off <= even / 2; ++off) b.add_edge(i, (i + off) % n);
    }
    if (d % 2 == 1) {
        if (n % 2 == 0) {
            for (int i = 0; i < n / 2; ++i) b.add_edge(i, i + n / 2);
        } else {
            // Vertex n-1 is left one short.
            const int half = (n - 1) / 2;
            for (int i = 0; i < half; ++i) b.add_edge(i, i + half);
        }
    }
    return finish(b.build(), "nearly_regular", std::int64_t{n} * d / 2, std::nullopt, {{"n", n}, {"d", d}});
}

ConstructionResult clique_join_empty(int a, int n) {
    require_order(n);
    require(a >= 1 && a < n, "clique_join_empty needs 1 <= a < n");
    const Graph g = join(complete_graph(a), empty_graph(n - a));
    return finish(g, "clique_join_empty", binom2(a) + std::int64_t{a} * (n - a), std::nullopt, {{"n", n}, {"a", a}});
}

ConstructionResult prop2_delta2(const Tree& t, int n) {
    require_order(n);
    const int k = t.order();
    require(!is_star(t), "delta2 construction excludes stars");
    const auto d2 = tree_params(t).delta2;
    require(d2 && *d2 > 2, "delta2 construction needs delta2(T) > 2");
    require(n >= k, "delta2 construction needs n >= |T|");
    const int full = (n - 1) / (k - 1);
    const int rest = (n - 1) - full * (k - 1);

    GraphBuilder b(n);
    int next = 1;
    auto block = [&](int size) {
        const int gate = take(next, 1)[0];
        b.add_edge(0, gate);
        if (size == 1) return;
        const auto vs = take(next, size - 1);
        b.add_clique(vs);
        for (int i = 0; i < std::min(*d2 - 2, size - 1); ++i) b.add_edge(gate, vs[i]);
    };
    for (int i = 0; i < full; ++i) block(k - 1);
    std::int64_t claimed = full * (binom2(k - 2) + *d2 - 1);
    if (rest > 0) {
        block(rest);
        claimed += 1 + binom2(rest - 1) + std::min(*d2 - 2, rest - 1);
    }
    return finish(b.build(), "prop2_delta2", claimed, full * (binom2(k - 2) + *d2 - 1),
                  {{"n", n}, {"k", k}, {"delta2", *d2}, {"blocks", full}, {"remainder", rest}});
}

ConstructionResult complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1 && a + b <= kMaxVertices, "complete_bipartite needs a, b >= 1 and a + b <= 64");
    return finish(complete_bipartite_graph(a, b), "complete_bipartite", std::int64_t{a} * b, std::nullopt,
                  {{"a", a}, {"b", b}});
}

ConstructionResult branch_construction(const Tree& t, int n) {
    require_order(n);
    require(!is_path(t), "branch construction excludes paths");
    const int m = tree_params(t).m;
    require(m >= 2, "branch construction needs m(T) >= 2");
    require(n >= 2, "branch construction needs n >= 2");
    const int r = (n - 1) / (m - 1);
    const int s = (n - 1) - r * (m - 1);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(0, v);
    int next = 1;
    for (int i = 0; i < r; ++i) b.add_clique(take(next, m - 1));
    b.add_clique(take(next, s));
    const std::int64_t base = n - 1 + r * binom2(m - 1);
    return finish(b.build(), "branch_construction", base + binom2(s), base,
                  {{"n", n}, {"m", m}, {"r", r}, {"s", s}});
}

ConstructionResult cycle_of_cliques(int n, int block) {
    require_order(n);
    require(block >= 2, "cycle_of_cliques needs block >= 2");
    GraphBuilder b(n);
    const auto units = clique_units(b, n, block);
    const int u = static_cast<int>(units.size());
    if (u >= 2) {
        for (int j = 0; j < u; ++j) b.add_edge(units[j].out, units[(j + 1) % u].in);
    }
    const int s = n / block;
    const int r = n % block;
    const std::int64_t claimed = s * binom2(block) + binom2(r) + (u >= 2 ? u : 0);
    return finish(b.build(), "cycle_of_cliques", claimed, s * (1 + binom2(block)),
                  {{"n", n}, {"block", block}, {"units", u}, {"remainder", r}});
}

ConstructionResult path_of_cliques(int n, int block) {
    require_order(n);
    require(block >= 1, "path_of_cliques needs block >= 1");
    GraphBuilder b(n);
    const auto units = clique_units(b, n, block);
    const int u = static_cast<int>(units.size());
    for (int j = 0; j + 1 < u; ++j) b.add_edge(units[j].out, units[j + 1].in);
    const int s = n / block;
    const int r = n % block;
    return finish(b.build(), "path_of_cliques", s * binom2(block) + binom2(r) + (u - 1), std::nullopt,
                  {{"n", n}, {"block", block}, {"units", u}, {"remainder", r}});
}

const std::vector<std::string>& named_small_names() {
    static const std::vector<std::string> names{"cycle",           "star",         "k1_plus_k2_empty",
                                                "k2_plus_empty",   "k1_plus_matching", "k2_n2",
                                                "split_plus_edge", "s222_extremal", "k5_pendants"};
    return names;
}

ConstructionResult named_small(std::string_view name, int n) {
    require_order(n);
    auto need = [&](int lo) {
        require(n >= lo, std::string(name) + " needs n >= " + std::to_string(lo));
    };
    const std::string id(name);
    const Params params{{"n", n}};
    if (name == "cycle") {
        need(3);
        return finish(cycle_graph(n), id, n, std::nullopt, params);
    }
    if (name == "star") {
        need(2);
        return finish(star_graph(n - 1), id, n - 1, std::nullopt, params);
    }
    if (name == "k1_plus_k2_empty") {
        need(3);
        const Graph rest = n == 3 ? complete_graph(2) : disjoint_union(complete_graph(2), empty_graph(n - 3));
        return finish(join(empty_graph(1), rest), id, n, std::nullopt, params);
    }
    if (name == "k2_plus_empty") {
        need(3);
        return finish(join(complete_graph(2), empty_graph(n - 2)), id, 2 * n - 3, std::nullopt, params);
    }
    if (name == "k1_plus_matching") {
        need(2);
        return finish(join(empty_graph(1), matching_graph(n - 1)), id, (3 * (n - 1)) / 2, std::nullopt, params);
    }
    if (name == "k2_n2") {
        need(3);
        return finish(complete_bipartite_graph(2, n - 2), id, 2 * n - 4, std::nullopt, params);
    }
    if (name == "split_plus_edge" || name == "s222_extremal") {
        need(4);
        const Graph rest = n == 4 ? complete_graph(2) : disjoint_union(empty_graph(n - 4), complete_graph(2));
        return finish(join(complete_graph(2), rest), id, 2 * n - 2, std::nullopt, params);
    }
    if (name == "k5_pendants") {
        need(5);
        GraphBuilder b(n);
        const std::vector<int> core{0, 1, 2, 3, 4};
        b.add_clique(core);
        for (int v = 5; v < n; ++v) b.add_edge(0, v);
        return finish(b.build(), id, n + 5, std::nullopt, params);
    }
    throw Error("unknown construction name '" + id + "'");
}

}  // namespace turanc
