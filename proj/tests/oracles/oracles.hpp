#pragma once

// Slow, obviously-correct reference implementations used only by tests.
// Nothing here calls into the library's search code: graphs are plain
// adjacency matrices and every question is answered by exhaustion.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix empty_matrix(int n) { return Matrix(n, std::vector<bool>(n, false)); }

inline int order(const Matrix& a) { return static_cast<int>(a.size()); }

inline std::vector<std::pair<int, int>> edge_list(const Matrix& a) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(a); ++u)
        for (int v = u + 1; v < order(a); ++v)
            if (a[u][v]) out.emplace_back(u, v);
    return out;
}

inline int degree(const Matrix& a, int v) { return static_cast<int>(std::count(a[v].begin(), a[v].end(), true)); }

// Labeled graph number `code` on n vertices: bit i of code is the i-th pair (u<v) in
// row-major order.
inline Matrix from_pair_code(std::uint64_t code, int n) {
    Matrix a = empty_matrix(n);
    int i = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++i)
            if ((code >> i) & 1U) a[u][v] = a[v][u] = true;
    return a;
}

inline bool connected(const Matrix& a) {
    const int n = order(a);
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (a[u][v] && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Pair code of the graph relabeled by perm (vertex v goes to perm[v]).
inline std::uint64_t permuted_code(const Matrix& a, const std::vector<int>& perm) {
    const int n = order(a);
    std::vector<std::vector<int>> index(n, std::vector<int>(n, 0));
    int i = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++i) index[u][v] = index[v][u] = i;
    std::uint64_t code = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a[u][v]) code |= std::uint64_t{1} << index[perm[u]][perm[v]];
    return code;
}

// Minimum pair code over all n! relabelings: a complete isomorphism invariant.
inline std::uint64_t min_code(const Matrix& a) {
    std::vector<int> perm(order(a));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do best = std::min(best, permuted_code(a, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Isomorphism classes of labeled graphs on n vertices, deduplicated by min_code.
// Cost 2^(n(n-1)/2) * n!; meant for n <= 6.
inline std::set<std::uint64_t> dedup_classes(int n, bool connected_only) {
    std::set<std::uint64_t> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        const Matrix a = from_pair_code(code, n);
        if (connected_only && !connected(a)) continue;
        classes.insert(min_code(a));
    }
    return classes;
}

inline std::uint64_t labeled_connected_count(int n) {
    std::uint64_t count = 0;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code)
        if (connected(from_pair_code(code, n))) ++count;
    return count;
}

inline std::uint64_t automorphism_count(const Matrix& a) {
    std::vector<int> perm(order(a));
    std::iota(perm.begin(), perm.end(), 0);
    const std::uint64_t self = permuted_code(a, perm);
    std::uint64_t count = 0;
    do count += permuted_code(a, perm) == self;
    while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Brute-force isomorphism test.
inline bool isomorphic(const Matrix& a, const Matrix& b) {
    if (order(a) != order(b)) return false;
    std::vector<int> id(order(b));
    std::iota(id.begin(), id.end(), 0);
    const std::uint64_t target = permuted_code(b, id);
    std::vector<int> perm = id;
    do
        if (permuted_code(a, perm) == target) return true;
    while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Claims that `reps` is exactly one graph per isomorphism class of connected
// graphs on n vertices. Checked by: each is connected, no two are isomorphic,
// and the class sizes n!/|Aut| add up to the number of labeled connected graphs.
inline bool complete_connected_transversal(const std::vector<Matrix>& reps, int n) {
    std::map<std::vector<int>, std::vector<const Matrix*>> buckets;
    std::uint64_t labeled = 0;
    for (const Matrix& a : reps) {
        if (order(a) != n || !connected(a)) return false;
        std::vector<int> sig;
        for (int v = 0; v < n; ++v) sig.push_back(degree(a, v));
        std::sort(sig.begin(), sig.end());
        auto& bucket = buckets[sig];
        for (const Matrix* other : bucket)
            if (isomorphic(a, *other)) return false;
        bucket.push_back(&a);
        labeled += factorial(n) / automorphism_count(a);
    }
    return labeled == labeled_connected_count(n);
}

// Tries every injective map of the pattern's vertices into the host and checks
// all pattern edges once the map is complete.
inline bool contains_by_maps(const Matrix& host, const Matrix& pattern) {
    const int h = order(host);
    const int p = order(pattern);
    if (p > h) return false;
    const auto edges = edge_list(pattern);
    std::vector<int> image(p, -1);
    std::vector<bool> used(h, false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == p) {
            for (auto [u, v] : edges)
                if (!host[image[u]][image[v]]) return false;
            return true;
        }
        for (int x = 0; x < h; ++x) {
            if (used[x]) continue;
            used[x] = true;
            image[i] = x;
            const bool hit = self(self, i + 1);
            used[x] = false;
            if (hit) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

// Maximum matching by exhaustive branching on the lowest unmatched vertex.
inline int matching_number(const Matrix& a) {
    const int n = order(a);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int from) -> int {
        int u = from;
        while (u < n && used[u]) ++u;
        if (u >= n) return 0;
        used[u] = true;
        int best = self(self, u + 1);  // u stays unmatched
        for (int v = u + 1; v < n; ++v) {
            if (!a[u][v] || used[v]) continue;
            used[v] = true;
            best = std::max(best, 1 + self(self, u + 1));
            used[v] = false;
        }
        used[u] = false;
        return best;
    };
    return rec(rec, 0);
}

inline std::vector<int> component_sizes_without(const Matrix& a, int removed) {
    const int n = order(a);
    std::vector<bool> seen(n, false);
    seen[removed] = true;
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int size = 0;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            ++size;
            for (int v = 0; v < n; ++v)
                if (a[u][v] && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

struct TreeFacts {
    int ell = 0, p = 0, max_deg = 0, min_deg = 0, nu = 0, delta2 = -1, m = 0, m2 = 0, w = 0;
    std::pair<int, int> bipartition{0, 0};
};

// Every parameter from its definition, with simple paths found by DFS from every vertex.
inline TreeFacts tree_facts(const Matrix& a) {
    const int n = order(a);
    TreeFacts f;
    f.max_deg = 0;
    f.min_deg = n;
    for (int v = 0; v < n; ++v) {
        const int d = degree(a, v);
        f.max_deg = std::max(f.max_deg, d);
        f.min_deg = std::min(f.min_deg, d);
        if (d > 1 && (f.delta2 < 0 || d < f.delta2)) f.delta2 = d;
    }
    std::vector<bool> on(n, false);
    auto walk = [&](auto&& self, int u, int len, bool thin) -> void {
        f.ell = std::max(f.ell, len);
        if (thin) f.p = std::max(f.p, len);
        for (int v = 0; v < n; ++v) {
            if (!a[u][v] || on[v]) continue;
            on[v] = true;
            self(self, v, len + 1, thin && degree(a, v) <= 2);
            on[v] = false;
        }
    };
    for (int s = 0; s < n; ++s) {
        on[s] = true;
        walk(walk, s, 1, degree(a, s) <= 2);
        on[s] = false;
    }
    f.nu = matching_number(a);
    f.m = n;
    f.m2 = n;
    for (int v = 0; v < n; ++v) {
        auto sizes = component_sizes_without(a, v);
        sizes.resize(std::max<std::size_t>(sizes.size(), 2), 0);
        f.m = std::min(f.m, sizes[0]);
        f.m2 = std::min(f.m2, sizes[0] + sizes[1]);
    }
    for (auto [u, v] : edge_list(a)) f.w = std::max(f.w, std::min(degree(a, u), degree(a, v)));
    std::vector<int> colour(n, -1);
    colour[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (a[u][v] && colour[v] < 0) {
                colour[v] = 1 - colour[u];
                stack.push_back(v);
            }
    }
    const int zeros = static_cast<int>(std::count(colour.begin(), colour.end(), 0));
    f.bipartition = {std::min(zeros, n - zeros), std::max(zeros, n - zeros)};
    return f;
}

}  // namespace oracle
