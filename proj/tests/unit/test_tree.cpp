#include <doctest.h>

#include "../common/support.hpp"
#include "turanc/canonical.hpp"
#include "turanc/error.hpp"
#include "turanc/tree.hpp"

using namespace turanc;

TEST_CASE("family expressions build the right shapes") {
    CHECK(parse_tree("P5").order() == 5);
    CHECK(parse_tree("S4").order() == 5);
    CHECK(parse_tree("S(3,2,1)").order() == 7);
    CHECK(parse_tree("D(2,3)").order() == 7);
    CHECK(parse_tree("B(7,4)").order() == 7);
    CHECK(parse_tree("Dstar22").order() == 7);
    CHECK(parse_tree("SD22").order() == 7);
    CHECK(parse_tree(" S ( 2 , 2 , 2 ) ").order() == 7);
    CHECK(isomorphic(parse_tree("B(7,4)").graph(), parse_tree("S(3,1,1,1)").graph()));
    CHECK(isomorphic(parse_tree("edges:0-1,1-2,2-3").graph(), path_graph(4)));
    CHECK(isomorphic(parse_tree("D(1,1)").graph(), path_graph(4)));
}

TEST_CASE("malformed expressions report a position") {
    for (const char* bad : {"", "Q5", "S(1)", "S(2,0,1)", "P", "D(2)", "edges:0-1,1-2,2-0", "edges:0-1,2-3", "S(2,2,2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_tree(bad), Error);
    }
    try {
        parse_tree("S(1)");
        FAIL("expected failure");
    } catch (const ParseError& e) {
        CHECK(e.position() <= 4);
    }
}

TEST_CASE("non-trees are rejected") {
    CHECK_THROWS_AS(Tree(cycle_graph(4)), Error);
    CHECK_THROWS_AS(Tree(empty_graph(2)), Error);
}

TEST_CASE("printing names round trips up to isomorphism") {
    for (const Tree& t : testing::trees_between(1, 9)) {
        const std::string name = tree_to_string(t);
        CAPTURE(name);
        CHECK(isomorphic(parse_tree(name).graph(), t.graph()));
    }
}

TEST_CASE("shortest names for the table trees") {
    CHECK(tree_to_string(parse_tree("S(2,1,1)")) == "B(5,3)");
    CHECK(tree_to_string(parse_tree("S(1,1,1)")) == "S3");
    CHECK(tree_to_string(parse_tree("D(2,2)")) == "D(2,2)");
}

TEST_CASE("parameters of the double star with two leaves per centre") {
    const TreeParams p = tree_params(parse_tree("D(2,2)"));
    CHECK(p.ell == 4);
    CHECK(p.p == 1);
    CHECK(p.max_deg == 3);
    CHECK(p.nu == 2);
    CHECK(p.delta2 == 3);
    CHECK(p.m == 3);
    CHECK(p.m2 == 4);
    CHECK(p.bipartition == std::pair{3, 3});
    CHECK(p.w == 3);
}

TEST_CASE("delta2 is absent only for a single edge") {
    CHECK_FALSE(tree_params(path_tree(2)).delta2.has_value());
    CHECK(tree_params(path_tree(3)).delta2 == 2);
}

TEST_CASE("parameters agree with definitions on every tree up to 9 vertices") {
    for (const Tree& t : testing::trees_between(2, 9)) {
        CAPTURE(tree_to_string(t));
        const TreeParams p = tree_params(t);
        const oracle::TreeFacts f = oracle::tree_facts(testing::to_matrix(t.graph()));
        CHECK(p.ell == f.ell);
        CHECK(p.p == f.p);
        CHECK(p.max_deg == f.max_deg);
        CHECK(p.min_deg == f.min_deg);
        CHECK(p.nu == f.nu);
        CHECK(p.delta2.value_or(-1) == f.delta2);
        CHECK(p.m == f.m);
        CHECK(p.m2 == f.m2);
        CHECK(p.bipartition == f.bipartition);
        CHECK(p.w == f.w);
    }
}

TEST_CASE("shape recognisers") {
    CHECK(is_path(parse_tree("P6")));
    CHECK_FALSE(is_path(parse_tree("S3")));
    CHECK(is_star(parse_tree("S5")));
    CHECK(is_star(parse_tree("P3")));
    CHECK(spider_legs(parse_tree("S(3,2,1)")) == std::vector<int>{3, 2, 1});
    CHECK_FALSE(spider_legs(parse_tree("D(2,2)")).has_value());
    CHECK(broom_shape(parse_tree("S(4,1,1)")) == std::pair{7, 5});
    CHECK_FALSE(broom_shape(parse_tree("S(2,2,1)")).has_value());
    CHECK(branch_sizes(parse_tree("S(3,2,1)"), 0).size() >= 1);
}
