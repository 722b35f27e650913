#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turanc/graph.hpp"
#include "turanc/tree.hpp"

namespace turanc {

/// A connected lower-bound witness with the edge count its recipe promises.
struct ConstructionResult {
    Graph graph{1};
    std::string name;
    std::int64_t claimed_edges = 0;
    /// Closed form quoted for the bound when it differs in shape from what the
    /// recipe builds (block remainders, different divisors). Informational.
    std::optional<std::int64_t> formula_edges;
    std::map<std::string, std::int64_t> params;
};

std::int64_t binom2(std::int64_t x);

/// X ∪ Y a clique with |X| = k - 2s, |Y| = s, and Y completely joined to the
/// remaining n - k + s vertices. P_{k+1}-free. Requires k > 2s >= 2, n >= k - s.
ConstructionResult kopylov(int n, int k, int s);

/// Kopylov graph avoiding the longest path of T: k = ell - 1, s = floor((ell - 2) / 2).
/// Requires ell(T) >= 4.
ConstructionResult prop2_longest_path(const Tree& t, int n);

/// Ring of cliques of size |T| - 2p - 3 joined through paths of p + 1 vertices,
/// with floor(n / (|T| - p - 1)) blocks; the last path takes the leftover vertices.
ConstructionResult prop2_induced_path(const Tree& t, int n);

/// Hub with legs of p + 1 vertices, each leg ending at one vertex of a clique of
/// size |T| - p - 1. Requires two vertices of degree >= 3 in T.
ConstructionResult prop2_induced_path_spider(const Tree& t, int n);

/// Connected graph with all degrees d, except one vertex of degree d - 1 when n*d is odd.
ConstructionResult nearly_regular(int n, int d);

/// K_a + E_{n-a}.
ConstructionResult clique_join_empty(int a, int n);

/// Hub joined to gates; each gate sees delta2 - 2 vertices of its own (k-2)-clique.
/// Requires T not a star and delta2(T) > 2.
ConstructionResult prop2_delta2(const Tree& t, int n);

ConstructionResult complete_bipartite(int a, int b);

/// K_1 + (r K_{m-1} ∪ K_s) with r = floor((n-1)/(m-1)). Requires T not a path, m(T) >= 2.
ConstructionResult branch_construction(const Tree& t, int n);

/// floor(n / block) cliques in a ring, consecutive ones joined by one edge between
/// distinct gates. A leftover vertex is spliced into one link; a larger leftover
/// becomes a smaller clique in the ring. Requires block >= 2.
ConstructionResult cycle_of_cliques(int n, int block);

/// Cliques of size `block` (plus a smaller last one) in a row, consecutive ones
/// joined by a single edge. Requires block >= 1.
ConstructionResult path_of_cliques(int n, int block);

/// Names accepted by named_small, in a fixed order.
const std::vector<std::string>& named_small_names();

/// Small fixed families used as table witnesses:
///   cycle, star, k1_plus_k2_empty, k2_plus_empty, k1_plus_matching, k2_n2,
///   split_plus_edge (alias s222_extremal), k5_pendants.
ConstructionResult named_small(std::string_view name, int n);

}  // namespace turanc
