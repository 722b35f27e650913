// Maximum matching in general graphs by Edmonds' blossom contraction,
// O(n^3) with plain arrays; n <= 64 keeps everything on the stack.

#include <array>
#include <deque>

#include "turanc/graph.hpp"

namespace turanc {

namespace {

class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g) : g_(g), n_(g.order()) {
        match_.fill(-1);
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u : g_.neighbors(v)) {
                if (match_[u] == -1) {
                    match_[u] = v;
                    match_[v] = u;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u = find_augmenting_path(v); u != -1;) {
                const int pv = parent_[u];
                const int next = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = next;
            }
        }
    }

    int mate(int v) const { return match_[v]; }

private:
    int lowest_common_ancestor(int a, int b) const {
        std::array<bool, kMaxVertices> on_path{};
        for (;;) {
            a = base_[a];
            on_path[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (on_path[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        used_.fill(false);
        parent_.fill(-1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const int cur = lowest_common_ancestor(v, to);
                    in_blossom_.fill(false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = true;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::array<int, kMaxVertices> match_{};
    std::array<int, kMaxVertices> parent_{};
    std::array<int, kMaxVertices> base_{};
    std::array<bool, kMaxVertices> used_{};
    std::array<bool, kMaxVertices> in_blossom_{};
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    BlossomMatcher m(g);
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.order(); ++v) {
        if (m.mate(v) > v) out.emplace_back(v, m.mate(v));
    }
    return out;
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

}  // namespace turanc
