#include "turanc/graph.hpp"

#include <algorithm>
#include <functional>

#include "turanc/error.hpp"

namespace turanc {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices) {
        throw Error("graph order " + std::to_string(n) + " outside supported range 1..64");
    }
}

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    n_ = n;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> seq(n_);
    for (int v = 0; v < n_; ++v) seq[v] = degree(v);
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : VertexSet(adj_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const { return GraphBuilder(*this).add_edge(u, v).build(); }

Graph Graph::without_edge(int u, int v) const { return GraphBuilder(*this).remove_edge(u, v).build(); }

Graph Graph::without_vertex(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex " + std::to_string(v) + " out of range");
    return induced(vertices().without(v));
}

Graph Graph::relabeled(std::span<const int> new_label) const {
    if (static_cast<int>(new_label.size()) != n_) throw Error("relabeling has wrong length");
    Mask seen = 0;
    for (int x : new_label) {
        if (x < 0 || x >= n_ || (seen & bit(x))) throw Error("relabeling is not a permutation");
        seen |= bit(x);
    }
    Graph out(n_);
    out.m_ = m_;
    for (int u = 0; u < n_; ++u) {
        Mask row = 0;
        for (int v : neighbors(u)) row |= bit(new_label[v]);
        out.adj_[new_label[u]] = row;
    }
    return out;
}

Graph Graph::induced(VertexSet keep) const {
    keep = keep & vertices();
    if (keep.empty()) throw Error("induced subgraph on an empty vertex set");
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for (int v : keep) index[v] = k++;
    GraphBuilder b(k);
    for (int u : keep) {
        for (int v : neighbors(u) & keep) {
            if (u < v) b.add_edge(index[u], index[v]);
        }
    }
    return b.build();
}

bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

// ---- GraphBuilder ----------------------------------------------------------

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_pair(int u, int v) const {
    if (u < 0 || u >= g_.n_ || v < 0 || v >= g_.n_) {
        throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has a vertex outside 0.." +
                    std::to_string(g_.n_ - 1));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u) + " rejected");
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check_pair(u, v);
    if (!g_.adjacent(u, v)) {
        g_.adj_[u] |= bit(v);
        g_.adj_[v] |= bit(u);
        ++g_.m_;
    }
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
    check_pair(u, v);
    if (g_.adjacent(u, v)) {
        g_.adj_[u] &= ~bit(v);
        g_.adj_[v] &= ~bit(u);
        --g_.m_;
    }
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const int> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
    }
    return *this;
}

GraphBuilder& GraphBuilder::add_path(std::span<const int> vs) {
    for (std::size_t i = 1; i < vs.size(); ++i) add_edge(vs[i - 1], vs[i]);
    return *this;
}

// ---- families and combinators ---------------------------------------------

Graph empty_graph(int n) { return Graph(n); }

Graph add_edge(const Graph& g, int u, int v) { return g.with_edge(u, v); }

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    }
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph star_graph(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph matching_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; v += 2) b.add_edge(v, v + 1);
    return b.build();
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw Error("complete bipartite graph needs nonempty parts");
    return join(empty_graph(a), empty_graph(b));
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxVertices) throw Error("join would have " + std::to_string(n) + " vertices (limit 64)");
    GraphBuilder b(disjoint_union(g, h));
    for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < h.order(); ++v) b.add_edge(u, g.order() + v);
    }
    return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxVertices) throw Error("union would have " + std::to_string(n) + " vertices (limit 64)");
    GraphBuilder b(n);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(g.order() + u, g.order() + v);
    return b.build();
}

Graph k_copies(int k, const Graph& g) {
    if (k < 1) throw Error("k_copies needs k >= 1");
    if (k * g.order() > kMaxVertices) throw Error("k_copies would exceed 64 vertices");
    Graph out = g;
    for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

// ---- structure -------------------------------------------------------------

VertexSet reachable(const Graph& g, int start, VertexSet within) {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (int v : VertexSet(frontier)) next |= g.row(v);
        next &= within.bits() & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet(seen);
}

bool is_connected(const Graph& g) { return reachable(g, 0, g.vertices()) == g.vertices(); }

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet c = reachable(g, left.first(), left);
        out.push_back(c);
        left = left - c;
    }
    return out;
}

}  // namespace turanc
