#include "turanc/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>

#include "turanc/canonical.hpp"
#include "turanc/error.hpp"

namespace turanc {

Tree::Tree(Graph g) : graph_(std::move(g)) {
    if (graph_.edge_count() != graph_.order() - 1 || !is_connected(graph_)) {
        throw Error("graph with " + std::to_string(graph_.order()) + " vertices and " +
                    std::to_string(graph_.edge_count()) + " edges is not a tree");
    }
}

// ---- named families ----------------------------------------------------------

namespace {

void check_tree_order(long long n) {
    if (n < 1 || n > kMaxVertices) throw Error("tree would have " + std::to_string(n) + " vertices (limit 64)");
}

}  // namespace

Tree path_tree(int k) {
    check_tree_order(k);
    return Tree(path_graph(k));
}

Tree star_tree(int leaves) {
    if (leaves < 1) throw Error("star needs at least one leaf");
    check_tree_order(leaves + 1LL);
    return Tree(star_graph(leaves));
}

Tree spider_tree(const std::vector<int>& legs) {
    if (legs.size() < 3) throw Error("spider needs at least 3 legs");
    long long n = 1;
    for (int a : legs) {
        if (a < 1) throw Error("spider legs need at least one edge");
        n += a;
    }
    check_tree_order(n);
    GraphBuilder b(static_cast<int>(n));
    int next = 1;
    for (int a : legs) {
        int prev = 0;
        for (int i = 0; i < a; ++i) {
            b.add_edge(prev, next);
            prev = next++;
        }
    }
    return Tree(b.build());
}

Tree double_star_tree(int a, int b) {
    if (a < 1 || b < 1) throw Error("double star needs at least one leaf on each center");
    check_tree_order(a + b + 2LL);
    GraphBuilder g(a + b + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < a; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < b; ++i) g.add_edge(1, 2 + a + i);
    return Tree(g.build());
}

Tree broom_tree(int k, int a) {
    if (a < 2 || a > k - 2) {
        throw Error("broom B(" + std::to_string(k) + "," + std::to_string(a) + ") needs 2 <= a <= k-2");
    }
    std::vector<int> legs{a - 1};
    legs.resize(1 + (k - a), 1);
    return spider_tree(legs);
}

namespace {

Tree dstar22_tree() {
    GraphBuilder b(7);
    for (auto [u, v] : double_star_tree(2, 2).graph().edges()) b.add_edge(u, v);
    b.add_edge(2, 6);
    return Tree(b.build());
}

Tree sd22_tree() {
    GraphBuilder b(7);
    b.add_edge(0, 6).add_edge(6, 1);
    b.add_edge(0, 2).add_edge(0, 3).add_edge(1, 4).add_edge(1, 5);
    return Tree(b.build());
}

// ---- parser --------------------------------------------------------------------

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= s_.size();
    }
    std::size_t pos() const { return pos_; }
    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool consume(std::string_view word) {
        skip_space();
        if (s_.substr(pos_).starts_with(word)) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int number() {
        skip_space();
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            value = value * 10 + (s_[pos_] - '0');
            if (value > 1'000'000) throw ParseError("number too large", start);
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return static_cast<int>(value);
    }
    std::vector<int> number_list() {
        expect('(');
        std::vector<int> out{number()};
        while (peek() == ',') {
            ++pos_;
            out.push_back(number());
        }
        expect(')');
        return out;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

Tree parse_edge_list(Cursor& c) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = 0;
    if (!c.at_end()) {
        for (;;) {
            const int u = c.number();
            c.expect('-');
            const int v = c.number();
            if (u >= kMaxVertices || v >= kMaxVertices) c.fail("vertex index above 63");
            if (u == v) c.fail("self-loop in edge list");
            edges.emplace_back(u, v);
            max_vertex = std::max({max_vertex, u, v});
            if (c.at_end()) break;
            c.expect(',');
        }
    }
    GraphBuilder b(max_vertex + 1);
    for (auto [u, v] : edges) {
        if (b.adjacent(u, v)) throw Error("edge list repeats edge " + std::to_string(u) + "-" + std::to_string(v));
        b.add_edge(u, v);
    }
    return Tree(b.build());
}

}  // namespace

Tree parse_tree(std::string_view expr) {
    Cursor c(expr);
    if (c.at_end()) c.fail("empty tree expression");
    const std::size_t start = c.pos();
    auto arity = [&](const std::vector<int>& args, std::size_t want, const char* family) {
        if (args.size() != want) {
            throw ParseError(std::string(family) + " takes " + std::to_string(want) + " arguments", start);
        }
    };
    auto wrap = [&](auto&& make) -> Tree {
        try {
            return make();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), start);
        }
    };

    Tree result = [&]() -> Tree {
        if (c.consume("edges:")) return parse_edge_list(c);
        if (c.consume("Dstar22")) return dstar22_tree();
        if (c.consume("SD22")) return sd22_tree();
        if (c.consume("P")) {
            const int k = c.number();
            return wrap([&] { return path_tree(k); });
        }
        if (c.consume("S")) {
            if (c.peek() == '(') {
                auto legs = c.number_list();
                if (legs.size() < 3) throw ParseError("spider needs at least 3 legs", start);
                return wrap([&] { return spider_tree(legs); });
            }
            const int k = c.number();
            return wrap([&] { return star_tree(k); });
        }
        if (c.consume("D")) {
            auto args = c.number_list();
            arity(args, 2, "D");
            return wrap([&] { return double_star_tree(args[0], args[1]); });
        }
        if (c.consume("B")) {
            auto args = c.number_list();
            arity(args, 2, "B");
            return wrap([&] { return broom_tree(args[0], args[1]); });
        }
        c.fail("unknown tree family");
    }();
    if (!c.at_end()) c.fail("unexpected trailing input");
    return result;
}

// ---- structure -------------------------------------------------------------

bool is_path(const Tree& t) { return t.graph().max_degree() <= 2; }

bool is_star(const Tree& t) {
    int inner = 0;
    for (int v = 0; v < t.order(); ++v) inner += t.degree(v) > 1;
    return inner <= 1;
}

std::optional<std::vector<int>> spider_legs(const Tree& t) {
    const Graph& g = t.graph();
    int center = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 3) {
            if (center != -1) return std::nullopt;
            center = v;
        }
    }
    if (center == -1) return std::nullopt;
    std::vector<int> legs;
    for (int first : g.neighbors(center)) {
        int prev = center;
        int cur = first;
        int length = 1;
        while (g.degree(cur) == 2) {
            const int next = (g.neighbors(cur).without(prev)).first();
            prev = cur;
            cur = next;
            ++length;
        }
        legs.push_back(length);
    }
    std::sort(legs.begin(), legs.end(), std::greater<>());
    return legs;
}

std::optional<std::pair<int, int>> broom_shape(const Tree& t) {
    auto legs = spider_legs(t);
    if (!legs) return std::nullopt;
    for (std::size_t i = 1; i < legs->size(); ++i) {
        if ((*legs)[i] != 1) return std::nullopt;
    }
    return std::pair{t.order(), (*legs)[0] + 1};
}

std::vector<int> branch_sizes(const Tree& t, int v) {
    std::vector<int> sizes;
    const VertexSet rest = t.graph().vertices().without(v);
    VertexSet left = rest;
    while (!left.empty()) {
        VertexSet comp = reachable(t.graph(), left.first(), rest);
        sizes.push_back(comp.size());
        left = left - comp;
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

namespace {

// Farthest vertex from `start` and its distance.
std::pair<int, int> farthest(const Graph& g, int start) {
    Mask seen = bit(start);
    Mask frontier = seen;
    int dist = 0;
    int last = start;
    for (;;) {
        Mask next = 0;
        for (int v : VertexSet(frontier)) next |= g.row(v);
        next &= ~seen;
        if (!next) break;
        seen |= next;
        frontier = next;
        ++dist;
        last = VertexSet(next).first();
    }
    return {last, dist};
}

}  // namespace

int longest_path_vertices(const Graph& g) {
    if (g.edge_count() != g.order() - 1 || !is_connected(g)) throw Error("longest_path_vertices expects a tree");
    const int x = farthest(g, 0).first;
    return farthest(g, x).second + 1;
}

TreeParams tree_params(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.order();
    if (n < 2) throw Error("tree parameters need at least 2 vertices");

    TreeParams out;
    out.ell = longest_path_vertices(g);
    out.max_deg = g.max_degree();
    out.min_deg = g.min_degree();
    out.nu = matching_number(g);

    Mask low = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) <= 2) low |= bit(v);
    }
    for (VertexSet left(low); !left.empty();) {
        VertexSet comp = reachable(g, left.first(), VertexSet(low));
        out.p = std::max(out.p, comp.size());
        left = left - comp;
    }

    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d > 1 && (!out.delta2 || d < *out.delta2)) out.delta2 = d;
    }

    out.m = n;
    out.m2 = n;
    for (int v = 0; v < n; ++v) {
        const auto sizes = branch_sizes(t, v);
        out.m = std::min(out.m, sizes[0]);
        out.m2 = std::min(out.m2, sizes[0] + (sizes.size() > 1 ? sizes[1] : 0));
    }

    // Two-colouring by BFS layers.
    Mask colour[2] = {bit(0), 0};
    Mask seen = bit(0);
    Mask frontier = seen;
    for (int layer = 1; frontier; ++layer) {
        Mask next = 0;
        for (int v : VertexSet(frontier)) next |= g.row(v);
        next &= ~seen;
        colour[layer % 2] |= next;
        seen |= next;
        frontier = next;
    }
    const int a = std::popcount(colour[0]);
    const int b = std::popcount(colour[1]);
    out.bipartition = {std::min(a, b), std::max(a, b)};

    for (auto [u, v] : g.edges()) out.w = std::max(out.w, std::min(g.degree(u), g.degree(v)));
    return out;
}

// ---- printer -----------------------------------------------------------------

namespace {

std::string join_numbers(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

std::string tree_to_string(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.order();
    std::vector<std::string> names;
    if (is_path(t)) names.push_back("P" + std::to_string(n));
    if (n >= 2 && is_star(t)) names.push_back("S" + std::to_string(n - 1));
    if (auto legs = spider_legs(t)) {
        names.push_back("S(" + join_numbers(*legs) + ")");
        if (auto broom = broom_shape(t)) {
            names.push_back("B(" + std::to_string(broom->first) + "," + std::to_string(broom->second) + ")");
        }
    }
    std::vector<int> inner;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 1) inner.push_back(v);
    }
    if (inner.size() == 2 && g.adjacent(inner[0], inner[1])) {
        const int a = g.degree(inner[0]) - 1;
        const int b = g.degree(inner[1]) - 1;
        names.push_back("D(" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + ")");
    }
    if (n == 7) {
        if (isomorphic(g, dstar22_tree().graph())) names.push_back("Dstar22");
        if (isomorphic(g, sd22_tree().graph())) names.push_back("SD22");
    }
    if (!names.empty()) {
        return *std::min_element(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
    }
    std::string out = "edges:";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

}  // namespace turanc
