#include <doctest.h>

#include "../common/support.hpp"
#include "turanc/bounds.hpp"
#include "turanc/error.hpp"

using namespace turanc;

TEST_CASE("bound list has a fixed shape") {
    const auto bounds = evaluate_all_bounds(parse_tree("D(2,2)"), 9);
    const std::vector<std::string> names{"prop3_1", "prop3_2", "prop3_2_spider", "prop3_3", "prop3_4",
                                         "prop3_5", "prop3_6", "prop3_7",        "prop3_8", "prop3_9",
                                         "thm4",    "thm5_broom", "thm2_path_upper", "known_exact"};
    REQUIRE(bounds.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(bounds[i].name == names[i]);
    for (const auto& b : bounds) CHECK(b.applies() != !b.reason.empty());
    CHECK(best_lower_bound(bounds) == 14);
    CHECK_THROWS_AS(evaluate_all_bounds(path_tree(3), 9), Error);
}

TEST_CASE("pinned bound values") {
    auto value = [](const char* tree, int n, const char* name) {
        for (const auto& b : evaluate_all_bounds(parse_tree(tree), n))
            if (b.name == name) return b.value;
        FAIL("no bound named " << name);
        return std::optional<std::int64_t>{};
    };
    CHECK(value("D(2,2)", 10, "prop3_9") == 16);
    CHECK(value("S(2,1,1,1)", 8, "prop3_3") == 12);
    CHECK_FALSE(value("P6", 9, "prop3_7").has_value());
    CHECK_FALSE(value("S(2,2,2)", 9, "prop3_5").has_value());
}

TEST_CASE("path upper bound against the oracle") {
    for (int k = 4; k <= 7; ++k)
        for (int n = k; n <= 9; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(kopylov_upper_path(n, k - 1) == exc_bruteforce(path_tree(k), n).max_edges);
        }
    CHECK_THROWS_AS(kopylov_upper_path(3, 4), Error);
}

TEST_CASE("known exact values agree with the oracle on every tree up to seven vertices") {
    int covered = 0;
    for (const Tree& t : testing::trees_between(4, 7)) {
        for (int n = 1; n <= 8; ++n) {
            const std::int64_t oracle = n < t.order() ? n * (n - 1) / 2 : exc_bruteforce(t, n).max_edges;
            const auto exact = known_exact(t, n, oracle);
            CAPTURE(tree_to_string(t));
            CAPTURE(n);
            if (exact) {
                ++covered;
                CHECK(*exact == oracle);
            }
            // Values that do not depend on the oracle must hold on their own.
            if (const auto blind = known_exact(t, n)) CHECK(*blind == oracle);
        }
    }
    CHECK(covered > 150);
}

TEST_CASE("no lower bound exceeds the oracle") {
    for (const Tree& t : testing::trees_between(4, 6)) {
        for (int n = t.order(); n <= 8; ++n) {
            const auto oracle = exc_bruteforce(t, n).max_edges;
            for (const auto& b : evaluate_all_bounds(t, n)) {
                if (!b.applies()) continue;
                CAPTURE(b.name);
                if (b.kind == BoundKind::upper)
                    CHECK(*b.value >= oracle);
                else
                    CHECK(*b.value <= oracle);
            }
        }
    }
}

TEST_CASE("the seven-vertex spider with legs 3,2,1 is not covered at n = 7") {
    const Tree t = parse_tree("S(3,2,1)");
    CHECK_FALSE(known_exact(t, 7).has_value());
    CHECK(known_exact(t, 8) == 13);
    CHECK(exc_bruteforce(t, 7).max_edges == 12);
}

TEST_CASE("gamma report uses known values and the oracle") {
    const auto rows = gamma_report(parse_tree("S(2,2,2)"), 7, 12);
    REQUIRE(rows.size() == 6);
    CHECK(rows.front().source == "known_exact");
    CHECK(rows.front().exc == 12);
    CHECK(rows.back().ratio == Rational(2 * 22, 5 * 12));
    const auto sd = gamma_report(parse_tree("SD22"), 8, 8);
    CHECK(sd.front().source == "oracle");
    CHECK(sd.front().exc == 16);
}
