#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "turanc/graph.hpp"

namespace turanc {

/// Relabeling-invariant encoding of a graph: equal iff the graphs are isomorphic.
/// The bytes are the graph6 string of the canonically relabeled graph
/// (adjacency text for orders 63 and 64).
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

private:
    std::string bytes_;
};

struct CanonicalLabeling {
    /// vertex_at[i] is the original vertex placed at canonical position i.
    std::vector<int> vertex_at;
    Graph canonical;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

namespace detail {

/// Reusable search state for canonical labeling by equitable refinement plus
/// backtracking over individualizations, keeping the least leaf certificate
/// and pruning children that lie in a common orbit of the automorphisms found.
class Canonizer {
public:
    /// `adj` holds n rows; result is available through the accessors until the next run.
    void run(const Mask* adj, int n);

    /// Canonical adjacency rows (bit j of row i: positions i and j adjacent).
    const std::array<Mask, kMaxVertices>& rows() const { return best_rows_; }
    /// Original vertex placed at canonical position i.
    int vertex_at(int i) const { return best_lab_[i]; }
    int order() const { return n_; }

private:
    struct Partition {
        std::array<std::uint8_t, kMaxVertices> lab;
        std::array<std::uint8_t, kMaxVertices> len;  // valid at cell starts
    };

    void refine(Partition& p, Mask first_splitter) const;
    void search(Partition& p, int depth);
    void leaf(const Partition& p);
    void orbits_fixing(int depth, std::array<std::uint8_t, kMaxVertices>& rep) const;

    const Mask* adj_ = nullptr;
    int n_ = 0;
    bool have_best_ = false;
    std::array<Mask, kMaxVertices> best_rows_{};
    std::array<std::uint8_t, kMaxVertices> best_lab_{};
    std::array<std::uint8_t, kMaxVertices> fixed_{};
    std::vector<std::array<std::uint8_t, kMaxVertices>> generators_;
};

/// Upper triangle of canonical rows in graph6 bit order, first bit in the most
/// significant position, so numeric order equals graph6 byte order. n <= 11.
std::uint64_t pack_upper_triangle(const std::array<Mask, kMaxVertices>& rows, int n);
/// Inverse of pack_upper_triangle.
void unpack_upper_triangle(std::uint64_t key, int n, Mask* rows);

}  // namespace detail

}  // namespace turanc
