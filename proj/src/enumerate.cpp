#include "turanc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "turanc/embedding.hpp"
#include "turanc/error.hpp"

namespace turanc {

namespace {

using KeyList = std::vector<std::uint64_t>;

void check_order(int n, const EnumerationOptions& options) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw Error("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) + ", got " +
                    std::to_string(n));
    }
    if (n > kDefaultEnumerationLimit && !options.allow_large) {
        throw Error("n = " + std::to_string(n) + " needs allow_large (minutes of work and about 100 MB)");
    }
}

std::uint64_t canonical_key(detail::Canonizer& c, const Mask* rows, int n) {
    c.run(rows, n);
    return detail::pack_upper_triangle(c.rows(), n);
}

// Children of one parent graph on n-1 vertices that pass the augmentation test.
void extend(std::uint64_t parent, int n, detail::Canonizer& c, KeyList& out) {
    const int last = n - 1;
    std::array<Mask, kMaxVertices> base{};
    detail::unpack_upper_triangle(parent, last, base.data());
    std::array<int, kMaxVertices> deg{};
    for (int v = 0; v < last; ++v) deg[v] = std::popcount(base[v]);

    KeyList mine;
    std::array<Mask, kMaxVertices> child{};
    std::array<Mask, kMaxVertices> reduced{};
    for (Mask s = 0; s <= low_bits(last); ++s) {
        // The vertex placed last by the canonical labeling has maximum degree,
        // so the new vertex must reach the maximum degree of the child.
        const int ds = std::popcount(s);
        bool ok = true;
        for (int v = 0; v < last && ok; ++v) ok = deg[v] + static_cast<int>((s >> v) & 1U) <= ds;
        if (!ok) continue;

        for (int v = 0; v < last; ++v) child[v] = base[v] | (((s >> v) & 1U) ? bit(last) : 0);
        child[last] = s;
        c.run(child.data(), n);
        const int removed = c.vertex_at(last);
        const std::uint64_t key = detail::pack_upper_triangle(c.rows(), n);
        if (removed != last) {
            for (int v = 0, r = 0; v < n; ++v) {
                if (v == removed) continue;
                const Mask row = child[v] & ~bit(removed);
                const Mask lowpart = row & low_bits(removed);
                reduced[r++] = lowpart | ((row >> 1) & ~low_bits(removed));
            }
            if (canonical_key(c, reduced.data(), last) != parent) continue;
        }
        mine.push_back(key);
    }
    std::sort(mine.begin(), mine.end());
    mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    out.insert(out.end(), mine.begin(), mine.end());
}

KeyList next_level(const KeyList& parents, int n, int workers) {
    workers = std::max(1, workers);
    std::vector<KeyList> parts(workers);
    auto work = [&](int w) {
        detail::Canonizer c;
        for (std::size_t i = w; i < parents.size(); i += workers) extend(parents[i], n, c, parts[w]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    KeyList all;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    all.reserve(total);
    for (auto& p : parts) {
        all.insert(all.end(), p.begin(), p.end());
        KeyList().swap(p);
    }
    std::sort(all.begin(), all.end());
    return all;
}

bool key_connected(std::uint64_t key, int n) {
    std::array<Mask, kMaxVertices> rows{};
    detail::unpack_upper_triangle(key, n, rows.data());
    Mask seen = 1;
    Mask frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (int v : VertexSet(frontier)) next |= rows[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == low_bits(n);
}

struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const KeyList>> all;
    std::map<int, std::shared_ptr<const KeyList>> connected;
};

Cache& cache() {
    static Cache c;
    return c;
}

}  // namespace

std::shared_ptr<const std::vector<std::uint64_t>> all_graphs(int n, const EnumerationOptions& options) {
    check_order(n, options);
    if (!options.use_cache) {
        KeyList level{0};
        for (int k = 2; k <= n; ++k) {
            level = next_level(level, k, options.workers);
            if (options.progress) options.progress(k, level.size());
        }
        return std::make_shared<const KeyList>(std::move(level));
    }
    Cache& c = cache();
    std::lock_guard lock(c.mutex);
    int have = 1;
    if (c.all.empty()) {
        c.all[1] = std::make_shared<const KeyList>(KeyList{0});
        if (options.progress) options.progress(1, 1);
    }
    for (const auto& [order, keys] : c.all) {
        if (order <= n) have = order;
    }
    for (int k = have + 1; k <= n; ++k) {
        auto level = std::make_shared<const KeyList>(next_level(*c.all.at(k - 1), k, options.workers));
        c.all[k] = level;
        if (options.progress) options.progress(k, level->size());
    }
    return c.all.at(n);
}

std::shared_ptr<const std::vector<std::uint64_t>> connected_keys(int n, const EnumerationOptions& options) {
    check_order(n, options);
    if (options.use_cache) {
        std::lock_guard lock(cache().mutex);
        if (auto it = cache().connected.find(n); it != cache().connected.end()) return it->second;
    }
    const auto all = all_graphs(n, options);
    KeyList keys;
    for (std::uint64_t k : *all) {
        if (key_connected(k, n)) keys.push_back(k);
    }
    std::stable_sort(keys.begin(), keys.end(), [](std::uint64_t a, std::uint64_t b) {
        const int ea = std::popcount(a);
        const int eb = std::popcount(b);
        return ea != eb ? ea < eb : a < b;
    });
    auto shared = std::make_shared<const KeyList>(std::move(keys));
    if (!options.use_cache) return shared;
    std::lock_guard lock(cache().mutex);
    return cache().connected.emplace(n, shared).first->second;
}

Graph graph_from_key(std::uint64_t key, int n) {
    std::array<Mask, kMaxVertices> rows{};
    detail::unpack_upper_triangle(key, n, rows.data());
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v : VertexSet(rows[u] & ~low_bits(u + 1))) b.add_edge(u, v);
    }
    return b.build();
}

std::vector<Graph> enumerate_connected(int n, const EnumerationOptions& options) {
    const auto keys = connected_keys(n, options);
    std::vector<Graph> out;
    out.reserve(keys->size());
    for (std::uint64_t k : *keys) out.push_back(graph_from_key(k, n));
    return out;
}

ExcRecord exc_bruteforce(const Tree& t, int n, const EnumerationOptions& options) {
    if (t.order() < 4) throw Error("exc oracle needs a tree with at least 4 vertices");
    const auto start = std::chrono::steady_clock::now();
    const auto keys = connected_keys(n, options);
    const TreeEmbedder embedder(t);

    ExcRecord rec;
    rec.n = n;
    rec.tree = tree_to_string(t);
    std::size_t hi = keys->size();
    while (hi > 0) {
        const int edges = std::popcount((*keys)[hi - 1]);
        std::size_t lo = hi;
        while (lo > 0 && std::popcount((*keys)[lo - 1]) == edges) --lo;
        for (std::size_t i = lo; i < hi; ++i) {
            ++rec.graphs_examined;
            const Graph g = graph_from_key((*keys)[i], n);
            if (!embedder.contains(g)) rec.extremal.emplace_back(to_graph6(g));
        }
        if (!rec.extremal.empty()) {
            rec.max_edges = edges;
            break;
        }
        hi = lo;
    }
    if (rec.extremal.empty()) throw Error("internal error: no connected graph avoids the tree");
    std::sort(rec.extremal.begin(), rec.extremal.end());
    rec.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rec;
}

std::vector<MonotonicityPoint> monotonicity_scan(const Tree& t, int n_max, const EnumerationOptions& options) {
    std::vector<MonotonicityPoint> out;
    for (int n = std::max(1, t.order() - 1); n <= n_max; ++n) {
        MonotonicityPoint pt{n, exc_bruteforce(t, n, options).max_edges, false};
        for (const auto& prev : out) pt.violates = pt.violates || prev.max_edges > pt.max_edges;
        out.push_back(pt);
    }
    return out;
}

}  // namespace turanc
