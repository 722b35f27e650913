#include <algorithm>
#include <charconv>
#include <cstdio>

#include "turanc/error.hpp"
#include "turanc/graph.hpp"

namespace turanc {

// graph6: one byte n+63, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// packed six bits per byte, most significant bit first, each byte offset by 63.
std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) {
        throw Error("graph6 export supports at most 62 vertices (got " + std::to_string(n) +
                    "); use internal format (adj:) instead");
    }
    std::string out(1, static_cast<char>(n + 63));
    int value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", i);
    }
    if (text[0] == '~') throw ParseError("graph6 orders above 62 are not supported", 0);
    const int n = text[0] - 63;
    if (n < 1) throw ParseError("graph6 order must be at least 1", 0);
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected) {
        throw ParseError("graph6 string for " + std::to_string(n) + " vertices needs " + std::to_string(expected) +
                             " bytes",
                         std::min(text.size(), expected));
    }
    GraphBuilder b(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = text.back() - 63;
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", text.size() - 1);
    }
    return b.build();
}

std::string to_adjacency_text(const Graph& g) {
    std::string out = "adj:" + std::to_string(g.order()) + ":";
    char buf[20];
    for (int v = 0; v < g.order(); ++v) {
        if (v > 0) out.push_back(',');
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(g.row(v)));
        out += buf;
    }
    return out;
}

Graph from_adjacency_text(std::string_view text) {
    constexpr std::string_view prefix = "adj:";
    if (!text.starts_with(prefix)) throw ParseError("adjacency text must start with 'adj:'", 0);
    std::size_t pos = prefix.size();
    int n = 0;
    auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), n);
    if (ec != std::errc{} || p == text.data() + text.size() || *p != ':') {
        throw ParseError("expected '<order>:'", pos);
    }
    if (n < 1 || n > kMaxVertices) throw ParseError("order outside 1..64", pos);
    pos = static_cast<std::size_t>(p - text.data()) + 1;
    GraphBuilder b(n);
    std::vector<Mask> rows;
    while (pos <= text.size()) {
        Mask row = 0;
        auto [q, ec2] = std::from_chars(text.data() + pos, text.data() + text.size(), row, 16);
        if (ec2 != std::errc{}) throw ParseError("expected hexadecimal row", pos);
        rows.push_back(row);
        pos = static_cast<std::size_t>(q - text.data());
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    if (static_cast<int>(rows.size()) != n) throw ParseError("expected " + std::to_string(n) + " rows", pos);
    for (int u = 0; u < n; ++u) {
        if (rows[u] & ~low_bits(n)) throw ParseError("row " + std::to_string(u) + " has bits beyond the order", 0);
        if (rows[u] & bit(u)) throw ParseError("row " + std::to_string(u) + " has a self-loop", 0);
        for (int v : VertexSet(rows[u])) {
            if (!(rows[v] & bit(u))) throw ParseError("adjacency is not symmetric", 0);
            b.add_edge(u, v);
        }
    }
    return b.build();
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::string out = "graph " + std::string(name) + " {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace turanc
