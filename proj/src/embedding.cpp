#include "turanc/embedding.hpp"

#include <algorithm>

#include "turanc/error.hpp"

namespace turanc {

TreeEmbedder::TreeEmbedder(const Tree& pattern) : pattern_(pattern) {
    const Graph& t = pattern_.graph();
    const int k = t.order();
    int root = 0;
    for (int v = 1; v < k; ++v) {
        if (t.degree(v) > t.degree(root)) root = v;
    }

    // Subtree sizes for the rooting at `root`.
    std::vector<int> parent(k, -1);
    std::vector<int> bfs{root};
    Mask seen = bit(root);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        for (int c : VertexSet(t.row(bfs[i]) & ~seen)) {
            parent[c] = bfs[i];
            seen |= bit(c);
            bfs.push_back(c);
        }
    }
    std::vector<int> subtree(k, 1);
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];
    }

    order_.push_back(root);
    std::vector<int> pos(k, -1);
    pos[root] = 0;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const int v = order_[i];
        std::vector<int> children;
        for (int c : t.neighbors(v)) {
            if (c != parent[v]) children.push_back(c);
        }
        std::stable_sort(children.begin(), children.end(),
                         [&](int a, int b) { return subtree[a] > subtree[b]; });
        for (int c : children) {
            pos[c] = static_cast<int>(order_.size());
            order_.push_back(c);
        }
    }
    parent_pos_.resize(k);
    need_.resize(k);
    later_siblings_.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        const int v = order_[i];
        parent_pos_[i] = parent[v] < 0 ? -1 : pos[parent[v]];
        need_[i] = t.degree(v) - (parent[v] < 0 ? 0 : 1);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (parent_pos_[j] == parent_pos_[i] && parent_pos_[i] >= 0) ++later_siblings_[i];
        }
    }
}

bool TreeEmbedder::search(const Graph& host, std::vector<int>& image) const {
    const int k = pattern_.order();
    const int n = host.order();
    if (k > n) return false;

    std::array<Mask, kMaxVertices + 1> degree_at_least{};
    for (int v = 0; v < n; ++v) {
        for (int d = 0; d <= host.degree(v); ++d) degree_at_least[d] |= bit(v);
    }
    image.assign(k, -1);

    struct Search {
        const Graph& host;
        const TreeEmbedder& plan;
        const std::array<Mask, kMaxVertices + 1>& degree_at_least;
        std::vector<int>& image;
        int k;

        bool place(int i, Mask used) {
            if (i == k) return true;
            const int want_degree = plan.need_[i] + (i > 0 ? 1 : 0);
            Mask candidates = degree_at_least[want_degree] & ~used;
            const int parent = i > 0 ? image[plan.parent_pos_[i]] : -1;
            if (parent >= 0) candidates &= host.row(parent);
            for (int v : VertexSet(candidates)) {
                const Mask free = ~(used | bit(v));
                if (std::popcount(host.row(v) & free) < plan.need_[i]) continue;
                if (parent >= 0 && std::popcount(host.row(parent) & free) < plan.later_siblings_[i]) continue;
                image[i] = v;
                if (place(i + 1, used | bit(v))) return true;
            }
            return false;
        }
    };
    return Search{host, *this, degree_at_least, image, k}.place(0, 0);
}

bool TreeEmbedder::contains(const Graph& host) const {
    std::vector<int> image;
    return search(host, image);
}

std::optional<Embedding> TreeEmbedder::find(const Graph& host) const {
    std::vector<int> by_position;
    if (!search(host, by_position)) return std::nullopt;
    Embedding e{std::vector<int>(pattern_.order())};
    for (std::size_t i = 0; i < order_.size(); ++i) e.image[order_[i]] = by_position[i];
    if (!is_valid_embedding(host, pattern_, e)) throw Error("internal error: embedding failed verification");
    return e;
}

bool contains_tree(const Graph& host, const Tree& t) { return TreeEmbedder(t).contains(host); }

std::optional<Embedding> find_embedding(const Graph& host, const Tree& t) { return TreeEmbedder(t).find(host); }

bool is_valid_embedding(const Graph& host, const Tree& t, const Embedding& e) {
    if (static_cast<int>(e.image.size()) != t.order()) return false;
    Mask used = 0;
    for (int x : e.image) {
        if (x < 0 || x >= host.order() || (used & bit(x))) return false;
        used |= bit(x);
    }
    for (auto [u, v] : t.graph().edges()) {
        if (!host.adjacent(e.image[u], e.image[v])) return false;
    }
    return true;
}

bool is_saturated(const Graph& host, const Tree& t) {
    const TreeEmbedder embedder(t);
    if (embedder.contains(host)) throw Error("host already contains the pattern tree");
    if (!is_connected(host)) throw Error("saturation is only defined here for connected hosts");
    for (int u = 0; u < host.order(); ++u) {
        for (int v = u + 1; v < host.order(); ++v) {
            if (!host.adjacent(u, v) && !embedder.contains(host.with_edge(u, v))) return false;
        }
    }
    return true;
}

}  // namespace turanc
