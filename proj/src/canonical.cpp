#include "turanc/canonical.hpp"

#include <algorithm>

#include "turanc/error.hpp"

namespace turanc {

namespace detail {

namespace {

constexpr std::size_t kMaxGenerators = 64;

}  // namespace

// Splits cells by neighbour counts into each splitter until the partition is
// equitable. New cells are ordered by increasing count and all of them are
// queued, which keeps the result independent of vertex names.
void Canonizer::refine(Partition& p, Mask first_splitter) const {
    std::array<Mask, 4 * kMaxVertices> queue;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = first_splitter;
    std::array<std::uint8_t, kMaxVertices> count{};
    while (head < tail) {
        const Mask splitter = queue[head++];
        for (int s = 0; s < n_;) {
            const int len = p.len[s];
            if (len == 1) {
                ++s;
                continue;
            }
            bool uniform = true;
            for (int i = s; i < s + len; ++i) {
                count[i] = static_cast<std::uint8_t>(std::popcount(adj_[p.lab[i]] & splitter));
                if (count[i] != count[s]) uniform = false;
            }
            if (!uniform) {
                // Insertion sort of the segment by count (stable).
                for (int i = s + 1; i < s + len; ++i) {
                    const auto c = count[i];
                    const auto v = p.lab[i];
                    int j = i;
                    while (j > s && count[j - 1] > c) {
                        count[j] = count[j - 1];
                        p.lab[j] = p.lab[j - 1];
                        --j;
                    }
                    count[j] = c;
                    p.lab[j] = v;
                }
                int start = s;
                for (int i = s + 1; i <= s + len; ++i) {
                    if (i == s + len || count[i] != count[start]) {
                        p.len[start] = static_cast<std::uint8_t>(i - start);
                        Mask cell = 0;
                        for (int k = start; k < i; ++k) cell |= bit(p.lab[k]);
                        if (tail < queue.size()) queue[tail++] = cell;
                        start = i;
                    }
                }
            }
            s += len;
        }
    }
}

void Canonizer::orbits_fixing(int depth, std::array<std::uint8_t, kMaxVertices>& rep) const {
    for (int v = 0; v < n_; ++v) rep[v] = static_cast<std::uint8_t>(v);
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (const auto& gen : generators_) {
        bool fixes = true;
        for (int d = 0; d < depth && fixes; ++d) fixes = gen[fixed_[d]] == fixed_[d];
        if (!fixes) continue;
        for (int v = 0; v < n_; ++v) {
            const int a = find(v);
            const int b = find(gen[v]);
            if (a != b) rep[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
        }
    }
    for (int v = 0; v < n_; ++v) rep[v] = static_cast<std::uint8_t>(find(v));
}

void Canonizer::leaf(const Partition& p) {
    std::array<std::uint8_t, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<std::uint8_t>(i);
    std::array<Mask, kMaxVertices> rows{};
    for (int i = 0; i < n_; ++i) {
        Mask r = 0;
        for (int w : VertexSet(adj_[p.lab[i]])) r |= bit(pos[w]);
        rows[i] = r;
    }
    if (!have_best_) {
        have_best_ = true;
        best_rows_ = rows;
        best_lab_ = p.lab;
        return;
    }
    int cmp = 0;
    for (int i = 0; i < n_ && cmp == 0; ++i) {
        if (rows[i] != best_rows_[i]) cmp = rows[i] < best_rows_[i] ? -1 : 1;
    }
    if (cmp < 0) {
        best_rows_ = rows;
        best_lab_ = p.lab;
    } else if (cmp == 0 && generators_.size() < kMaxGenerators) {
        std::array<std::uint8_t, kMaxVertices> gen{};
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            gen[p.lab[i]] = best_lab_[i];
            identity = identity && p.lab[i] == best_lab_[i];
        }
        if (!identity) generators_.push_back(gen);
    }
}

void Canonizer::search(Partition& p, int depth) {
    int target = -1;
    for (int s = 0; s < n_; s += p.len[s]) {
        if (p.len[s] > 1) {
            target = s;
            break;
        }
    }
    if (target < 0) {
        leaf(p);
        return;
    }
    const int len = p.len[target];
    Mask cell = 0;
    for (int i = target; i < target + len; ++i) cell |= bit(p.lab[i]);

    std::array<std::uint8_t, kMaxVertices> rep{};
    std::size_t seen_generators = static_cast<std::size_t>(-1);
    Mask explored_reps = 0;
    for (int v : VertexSet(cell)) {
        if (generators_.size() != seen_generators) {
            orbits_fixing(depth, rep);
            seen_generators = generators_.size();
            Mask recomputed = 0;
            for (int u : VertexSet(explored_reps)) recomputed |= bit(rep[u]);
            explored_reps = recomputed;
        }
        if (explored_reps & bit(rep[v])) continue;

        Partition child = p;
        int at = target;
        while (child.lab[at] != v) ++at;
        std::swap(child.lab[at], child.lab[target]);
        child.len[target] = 1;
        child.len[target + 1] = static_cast<std::uint8_t>(len - 1);
        refine(child, bit(v));
        fixed_[depth] = static_cast<std::uint8_t>(v);
        search(child, depth + 1);
        explored_reps |= bit(rep[v]);
    }
}

void Canonizer::run(const Mask* adj, int n) {
    adj_ = adj;
    n_ = n;
    have_best_ = false;
    generators_.clear();
    Partition p;
    for (int i = 0; i < n; ++i) p.lab[i] = static_cast<std::uint8_t>(i);
    p.len[0] = static_cast<std::uint8_t>(n);
    refine(p, low_bits(n));
    search(p, 0);
}

std::uint64_t pack_upper_triangle(const std::array<Mask, kMaxVertices>& rows, int n) {
    std::uint64_t key = 0;
    int t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            if ((rows[i] >> j) & 1U) key |= std::uint64_t{1} << (63 - t);
        }
    }
    return key;
}

void unpack_upper_triangle(std::uint64_t key, int n, Mask* rows) {
    std::fill(rows, rows + n, Mask{0});
    int t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            if ((key >> (63 - t)) & 1U) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
}

}  // namespace detail

CanonicalLabeling canonical_labeling(const Graph& g) {
    detail::Canonizer c;
    c.run(g.rows().data(), g.order());
    CanonicalLabeling out{std::vector<int>(g.order()), Graph(g.order())};
    std::vector<int> new_label(g.order());
    for (int i = 0; i < g.order(); ++i) {
        out.vertex_at[i] = c.vertex_at(i);
        new_label[c.vertex_at(i)] = i;
    }
    out.canonical = g.relabeled(new_label);
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    const Graph canon = canonical_labeling(g).canonical;
    return CanonicalForm(canon.order() <= 62 ? to_graph6(canon) : to_adjacency_text(canon));
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace turanc
