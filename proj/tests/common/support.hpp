#pragma once

#include <vector>

#include "../oracles/oracles.hpp"
#include "turanc/enumerate.hpp"
#include "turanc/graph.hpp"
#include "turanc/tree.hpp"

namespace testing {

inline oracle::Matrix to_matrix(const turanc::Graph& g) {
    oracle::Matrix a = oracle::empty_matrix(g.order());
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

// One tree per isomorphism class with between lo and hi vertices.
inline std::vector<turanc::Tree> trees_between(int lo, int hi) {
    std::vector<turanc::Tree> out;
    for (int n = lo; n <= hi; ++n)
        for (std::uint64_t key : *turanc::connected_keys(n))
            if (std::popcount(key) == n - 1) out.emplace_back(turanc::graph_from_key(key, n));
    return out;
}

}  // namespace testing
