#include <doctest.h>

#include <set>

#include "../common/support.hpp"
#include "turanc/canonical.hpp"
#include "turanc/embedding.hpp"
#include "turanc/enumerate.hpp"
#include "turanc/error.hpp"

using namespace turanc;

TEST_CASE("class counts match labeled dedup up to six vertices") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(all_graphs(n)->size() == oracle::dedup_classes(n, false).size());
        CHECK(connected_keys(n)->size() == oracle::dedup_classes(n, true).size());
    }
}

TEST_CASE("published counts up to nine vertices") {
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
    const std::vector<std::size_t> conn{1, 1, 2, 6, 21, 112, 853, 11117, 261080};
    for (int n = 1; n <= 9; ++n) {
        CHECK(all_graphs(n)->size() == all[n - 1]);
        CHECK(connected_keys(n)->size() == conn[n - 1]);
    }
}

TEST_CASE("emitted graphs are connected, canonical and pairwise distinct") {
    for (int n = 1; n <= 7; ++n) {
        std::set<CanonicalForm> seen;
        int last_edges = -1;
        for (const Graph& g : enumerate_connected(n)) {
            CHECK(is_connected(g));
            CHECK(canonical_labeling(g).canonical == g);
            CHECK(seen.insert(canonical_form(g)).second);
            CHECK(g.edge_count() >= last_edges);
            last_edges = g.edge_count();
        }
    }
}

TEST_CASE("worker count does not change the output") {
    EnumerationOptions one;
    one.use_cache = false;
    EnumerationOptions many = one;
    many.workers = 5;
    for (int n = 1; n <= 8; ++n) {
        CHECK(*all_graphs(n, one) == *all_graphs(n, many));
        CHECK(*connected_keys(n, one) == *connected_keys(n, many));
    }
    CHECK(*connected_keys(8, many) == *connected_keys(8));
}

TEST_CASE("order limits") {
    CHECK_THROWS_AS(all_graphs(0), Error);
    CHECK_THROWS_AS(all_graphs(11), Error);
    CHECK_THROWS_AS(all_graphs(10), Error);
}

TEST_CASE("exc on small cases") {
    const ExcRecord p4 = exc_bruteforce(path_tree(4), 6);
    CHECK(p4.max_edges == 5);
    REQUIRE(p4.extremal.size() == 1);
    CHECK(isomorphic(from_graph6(p4.extremal.front().bytes()), star_graph(5)));

    const ExcRecord s3 = exc_bruteforce(star_tree(3), 7);
    CHECK(s3.max_edges == 7);
    for (const auto& f : s3.extremal) {
        const Graph g = from_graph6(f.bytes());
        CHECK(is_connected(g));
        CHECK_FALSE(contains_tree(g, star_tree(3)));
    }

    CHECK_THROWS_AS(exc_bruteforce(path_tree(3), 5), Error);
    // Below the tree's order nothing embeds.
    CHECK(exc_bruteforce(path_tree(6), 5).max_edges == 10);
}

TEST_CASE("every extremal graph is reported") {
    // Brute force over connected classes at n = 6 for S(2,1,1).
    const Tree t = parse_tree("S(2,1,1)");
    const ExcRecord r = exc_bruteforce(t, 6);
    std::set<CanonicalForm> expected;
    for (const Graph& g : enumerate_connected(6))
        if (g.edge_count() == r.max_edges && !contains_tree(g, t)) expected.insert(canonical_form(g));
    for (const Graph& g : enumerate_connected(6))
        if (g.edge_count() > r.max_edges) CHECK(contains_tree(g, t));
    CHECK(std::set<CanonicalForm>(r.extremal.begin(), r.extremal.end()) == expected);
}

TEST_CASE("monotonicity scan flags the drop after the tree's order") {
    const auto pts = monotonicity_scan(parse_tree("S(2,2,2)"), 8);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].n == 6);
    CHECK(pts[0].max_edges == 15);
    CHECK(pts[1].max_edges == 12);
    CHECK(pts[1].violates);
    CHECK(pts[2].max_edges == 14);
    CHECK(pts[2].violates);
    const auto paths = monotonicity_scan(path_tree(5), 8);
    CHECK(paths.front().max_edges == 6);
    CHECK(paths[1].violates);
}
