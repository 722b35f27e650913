#include <doctest.h>

#include "../common/support.hpp"
#include "../common/sweeps.hpp"
#include "turanc/constructions.hpp"
#include "turanc/embedding.hpp"
#include "turanc/error.hpp"

using namespace turanc;

namespace {

std::string describe(const testing::SweepResult& r) {
    std::string s;
    for (const auto& f : r.failures) s += f.generator + " " + f.tree + " n=" + std::to_string(f.n) + ": " + f.problem + "\n";
    return s;
}

}  // namespace

TEST_CASE("kopylov edge counts") {
    // X of size k - 2s and Y of size s form a clique; Y sees everything else.
    CHECK(kopylov(10, 5, 2).claimed_edges == binom2(3) + 2 * (10 - 3));
    CHECK(kopylov(6, 3, 1).graph.edge_count() == 1 + 4);
    CHECK_THROWS_AS(kopylov(10, 4, 2), Error);
    CHECK_THROWS_AS(kopylov(2, 5, 2), Error);
}

TEST_CASE("kopylov graphs avoid the long path, and the longest path is k vertices") {
    for (int k = 3; k <= 8; ++k)
        for (int s = 1; 2 * s < k; ++s)
            for (int n = k - s + 1; n <= 11; ++n) {
                const Graph g = kopylov(n, k, s).graph;
                CHECK_FALSE(contains_tree(g, path_tree(k + 1)));
                CHECK(contains_tree(g, path_tree(std::min(k, n))));
            }
}

TEST_CASE("nearly regular degrees") {
    for (int n = 2; n <= 14; ++n)
        for (int d = 2; d < n; ++d) {
            const Graph g = nearly_regular(n, d).graph;
            CHECK(g.max_degree() == d);
            CHECK(g.min_degree() >= d - 1);
            int short_vertices = 0;
            for (int v = 0; v < n; ++v) short_vertices += g.degree(v) < d;
            CHECK(short_vertices == (n * d) % 2);
        }
    CHECK_THROWS_AS(nearly_regular(5, 1), Error);
    CHECK(nearly_regular(2, 1).graph == complete_graph(2));
}

TEST_CASE("named small constructions") {
    CHECK(named_small("k2_plus_empty", 9).claimed_edges == 15);
    CHECK(named_small("k1_plus_matching", 9).claimed_edges == 12);
    CHECK(named_small("k2_n2", 9).claimed_edges == 14);
    CHECK(named_small("split_plus_edge", 9).claimed_edges == 16);
    CHECK(named_small("s222_extremal", 9).graph == named_small("split_plus_edge", 9).graph);
    CHECK(named_small("k5_pendants", 7).claimed_edges == 12);
    CHECK_FALSE(contains_tree(named_small("k5_pendants", 7).graph, parse_tree("S(3,2,1)")));
    CHECK_THROWS_AS(named_small("nope", 9), Error);
    CHECK_THROWS_AS(named_small("k5_pendants", 4), Error);
    for (const auto& name : named_small_names()) CHECK(named_small(name, 8).graph.order() == 8);
}

TEST_CASE("cycle and path of cliques") {
    CHECK(cycle_of_cliques(12, 4).claimed_edges == 3 * 6 + 3);
    CHECK(cycle_of_cliques(13, 4).claimed_edges == 3 * 6 + 4);   // spliced vertex adds one link
    CHECK(cycle_of_cliques(14, 4).claimed_edges == 3 * 6 + 1 + 4);
    CHECK(cycle_of_cliques(4, 4).claimed_edges == 6);
    CHECK(path_of_cliques(10, 3).claimed_edges == 3 * 3 + 3);
    CHECK(path_of_cliques(5, 1).graph == path_graph(5));
}

TEST_CASE("branch construction") {
    const Tree t = parse_tree("S(3,3,3)");  // m = 3
    const auto r = branch_construction(t, 10);
    CHECK(r.params.at("r") == 4);
    CHECK(r.params.at("s") == 1);
    CHECK(r.claimed_edges == 9 + 4);
    CHECK_THROWS_AS(branch_construction(path_tree(6), 10), Error);
}

TEST_CASE("delta2 construction") {
    const Tree t = parse_tree("D(2,3)");
    const auto r = prop2_delta2(t, 13);  // n = 6*2 + 1: two full blocks
    CHECK(r.claimed_edges == 2 * 13 - 2);
    CHECK(r.formula_edges == 2 * 13 - 2);
    CHECK_THROWS_AS(prop2_delta2(parse_tree("S5"), 10), Error);
    CHECK_THROWS_AS(prop2_delta2(parse_tree("S(2,2,2)"), 10), Error);
}

TEST_CASE("bound witnesses are sound for trees up to seven vertices") {
    testing::SweepResult res;
    testing::sweep_bounds(res, testing::trees_between(4, 7), 11);
    testing::sweep_kopylov(res, 11);
    INFO(describe(res));
    CHECK(res.failures.empty());
    CHECK(res.checked > 1000);
}
