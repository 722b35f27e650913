#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "turanc/canonical.hpp"
#include "turanc/graph.hpp"
#include "turanc/tree.hpp"

namespace turanc {

inline constexpr int kMaxEnumerationOrder = 10;
/// Orders above this need EnumerationOptions::allow_large.
inline constexpr int kDefaultEnumerationLimit = 9;

struct EnumerationOptions {
    int workers = 1;
    bool allow_large = false;
    /// Reuse (and fill) the process-wide level cache. Off: recompute from scratch.
    bool use_cache = true;
    /// Called after each finished order with (order, graphs at that order).
    std::function<void(int, std::size_t)> progress;
};

/// Every graph on n vertices up to isomorphism, as packed canonical
/// upper triangles (see detail::pack_upper_triangle), produced by canonical
/// augmentation: a child G + v is kept when G + v - c is isomorphic to G,
/// where c is the vertex that the canonical labeling of G + v places last.
/// Results are cached per order for the life of the process.
std::shared_ptr<const std::vector<std::uint64_t>> all_graphs(int n, const EnumerationOptions& options = {});

/// Connected graphs on n vertices, one per isomorphism class, ordered by
/// edge count and then by canonical form. Each graph is in canonical labeling.
std::vector<Graph> enumerate_connected(int n, const EnumerationOptions& options = {});

/// Compact variant of enumerate_connected: packed keys, same order.
std::shared_ptr<const std::vector<std::uint64_t>> connected_keys(int n, const EnumerationOptions& options = {});

Graph graph_from_key(std::uint64_t key, int n);

/// Result of the exhaustive connected-Turán search.
struct ExcRecord {
    int n = 0;
    std::string tree;  ///< canonical tree expression
    int max_edges = 0;
    std::vector<CanonicalForm> extremal;  ///< all connected T-free graphs with max_edges edges, sorted
    std::uint64_t graphs_examined = 0;
    std::chrono::milliseconds elapsed{0};
};

/// ex_c(n, T) by exhaustive search over connected graphs on n vertices,
/// scanning edge classes from the densest down. Requires |T| >= 4 and n <= 9
/// (n = 10 with allow_large).
ExcRecord exc_bruteforce(const Tree& t, int n, const EnumerationOptions& options = {});

struct MonotonicityPoint {
    int n = 0;
    int max_edges = 0;
    bool violates = false;  ///< some smaller order in the scan has strictly more edges

    friend bool operator==(const MonotonicityPoint&, const MonotonicityPoint&) = default;
};

/// ex_c(n, T) for |T| - 1 <= n <= n_max.
std::vector<MonotonicityPoint> monotonicity_scan(const Tree& t, int n_max, const EnumerationOptions& options = {});

}  // namespace turanc
