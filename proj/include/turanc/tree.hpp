#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turanc/graph.hpp"

namespace turanc {

/// A graph certified to be a tree: connected with n - 1 edges.
class Tree {
public:
    /// Throws turanc::Error when `g` is not a tree.
    explicit Tree(Graph g);

    const Graph& graph() const { return graph_; }
    int order() const { return graph_.order(); }
    int degree(int v) const { return graph_.degree(v); }

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    Graph graph_;
};

/// The ten parameters of a tree used by the lower-bound constructions.
struct TreeParams {
    int ell = 0;                   ///< vertices on a longest path
    int p = 0;                     ///< longest path all of whose vertices have degree <= 2
    int max_deg = 0;
    int min_deg = 0;
    int nu = 0;                    ///< matching number
    std::optional<int> delta2;     ///< smallest degree above 1; absent only for K_2
    int m = 0;                     ///< min over v of the largest component of T - v
    int m2 = 0;                    ///< min over v of the two largest components of T - v
    std::pair<int, int> bipartition{0, 0};  ///< colour class sizes, smaller first
    int w = 0;                     ///< max over edges of the smaller endpoint degree

    friend bool operator==(const TreeParams&, const TreeParams&) = default;
};

/// Parses the tree-family grammar:
///   P<k>            path on k vertices
///   S<k>            star with k leaves
///   S(a1,...,aj)    spider, j >= 3 legs with a_i edges each
///   D(a,b)          double star on a+b+2 vertices
///   B(k,a)          broom S(a-1,1,...,1) on k vertices, 2 <= a <= k-2
///   Dstar22         D(2,2) with one leaf extended by an edge
///   SD22            D(2,2) with the central edge subdivided
///   edges:u-v,...   explicit edge list
/// Whitespace is ignored. Throws ParseError (with position) or Error.
Tree parse_tree(std::string_view expr);

Tree path_tree(int k);
Tree star_tree(int leaves);
Tree spider_tree(const std::vector<int>& legs);
Tree double_star_tree(int a, int b);
Tree broom_tree(int k, int a);

/// Shortest family expression naming this tree up to isomorphism,
/// otherwise an `edges:` expression.
std::string tree_to_string(const Tree& t);

/// Requires order >= 2.
TreeParams tree_params(const Tree& t);

bool is_path(const Tree& t);
bool is_star(const Tree& t);
/// Leg lengths (non-increasing) when t has exactly one vertex of degree >= 3.
std::optional<std::vector<int>> spider_legs(const Tree& t);
/// (k, a) when t is a broom B(k, a) in spider form (at least 3 legs, at most one longer than 1).
std::optional<std::pair<int, int>> broom_shape(const Tree& t);

/// Sizes of the components of T - v, largest first.
std::vector<int> branch_sizes(const Tree& t, int v);
/// Number of vertices on a longest path (diameter + 1).
int longest_path_vertices(const Graph& g);

}  // namespace turanc
