#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turanc {

inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

/// A set of vertices of a graph with at most 64 vertices, one bit per vertex.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(Mask rest) : rest_(rest) {}

        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) { return VertexSet(low_bits(n)); }

    constexpr Mask bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    /// Smallest member; the set must be nonempty.
    int first() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

private:
    Mask bits_ = 0;
};

class GraphBuilder;

/// Undirected simple graph on 1..64 labeled vertices. Immutable value:
/// every modifier returns a new graph.
class Graph {
public:
    /// The empty graph E_n. Throws turanc::Error unless 1 <= n <= 64.
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    Mask row(int v) const { return adj_[v]; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    /// Closed neighborhood N[v].
    VertexSet closed_neighbors(int v) const { return VertexSet(adj_[v] | bit(v)); }
    VertexSet vertices() const { return VertexSet::range(n_); }
    std::span<const Mask> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

    int max_degree() const;
    int min_degree() const;
    std::vector<int> degree_sequence() const;  // non-increasing
    std::vector<std::pair<int, int>> edges() const;  // (u, v) with u < v, lexicographic

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Graph on n-1 vertices; vertices above v shift down by one.
    Graph without_vertex(int v) const;
    /// Vertex v of this graph becomes vertex new_label[v]; new_label must be a permutation.
    Graph relabeled(std::span<const int> new_label) const;
    /// Subgraph induced on `keep`, vertices renumbered in increasing order.
    Graph induced(VertexSet keep) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend class GraphBuilder;
    Graph() = default;

    int n_ = 0;
    int m_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

/// Mutable companion used by generators; produces an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int order() const { return g_.n_; }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }

    /// Idempotent. Throws on loops and out-of-range vertices.
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& remove_edge(int u, int v);
    /// Makes `vs` a clique.
    GraphBuilder& add_clique(std::span<const int> vs);
    GraphBuilder& add_path(std::span<const int> vs);

    Graph build() const { return g_; }

private:
    void check_pair(int u, int v) const;
    Graph g_;
};

// ---- construction and combinators ------------------------------------------

Graph empty_graph(int n);
Graph add_edge(const Graph& g, int u, int v);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Star with `leaves` leaves; vertex 0 is the center.
Graph star_graph(int leaves);
/// M_n: floor(n/2) disjoint edges, plus an isolated vertex when n is odd.
Graph matching_graph(int n);
Graph complete_bipartite_graph(int a, int b);

/// G + H: disjoint union plus every edge between the two parts. G comes first.
Graph join(const Graph& g, const Graph& h);
/// G ∪ H with G's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h);
/// kG, copies laid out consecutively.
Graph k_copies(int k, const Graph& g);

// ---- structure ---------------------------------------------------------------

bool is_connected(const Graph& g);
/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Vertices reachable from `start` inside `within`.
VertexSet reachable(const Graph& g, int start, VertexSet within);
/// Size of a maximum matching (Edmonds' blossom algorithm).
int matching_number(const Graph& g);
/// Edges of one maximum matching.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

// ---- serialization -----------------------------------------------------------

/// graph6 without the optional ">>graph6<<" header; supports n <= 62.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);
/// "adj:<n>:<row0 hex>,<row1 hex>,..." — lossless for every supported order.
std::string to_adjacency_text(const Graph& g);
Graph from_adjacency_text(std::string_view text);
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace turanc
