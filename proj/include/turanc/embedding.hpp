#pragma once

#include <optional>
#include <vector>

#include "turanc/graph.hpp"
#include "turanc/tree.hpp"

namespace turanc {

/// Injective map from the vertices of a tree into a host graph that sends
/// every tree edge onto a host edge.
struct Embedding {
    std::vector<int> image;  ///< image[tree vertex] = host vertex

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Exact tree-in-graph search prepared once per pattern. The pattern is
/// rooted at a maximum-degree vertex and visited breadth first, children in
/// decreasing subtree size; candidates are pruned by degree and by the number
/// of still-free neighbours each placed vertex needs for its remaining children.
class TreeEmbedder {
public:
    explicit TreeEmbedder(const Tree& pattern);

    bool contains(const Graph& host) const;
    std::optional<Embedding> find(const Graph& host) const;
    const Tree& pattern() const { return pattern_; }

private:
    bool search(const Graph& host, std::vector<int>& image) const;

    Tree pattern_;
    std::vector<int> order_;        // pattern vertices in placement order
    std::vector<int> parent_pos_;   // position of the parent in order_, -1 for the root
    std::vector<int> need_;         // children of order_[i]
    std::vector<int> later_siblings_;  // children of the same parent placed after position i
};

bool contains_tree(const Graph& host, const Tree& t);
std::optional<Embedding> find_embedding(const Graph& host, const Tree& t);
/// True when the map is injective into the host and preserves every tree edge.
bool is_valid_embedding(const Graph& host, const Tree& t, const Embedding& e);

/// True iff adding any missing edge to `host` creates a copy of `t`.
/// Throws when `host` already contains `t` or is disconnected.
bool is_saturated(const Graph& host, const Tree& t);

}  // namespace turanc
