#include "linkless/graph_io.hpp"

#include <sstream>

namespace linkless {

auto to_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

auto from_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty input", 0);
    if (text.starts_with(">>graph6<<"))
        throw ParseError("graph6: header form not supported", 0);

    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(i) + " (value " + std::to_string(c) + ") outside 63..126", static_cast<long>(i));
    }

    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 63)
        throw ParseError("graph6: byte 0 announces n > 62, unsupported (max 32 vertices)", 0);
    if (n == 0)
        throw ParseError("graph6: byte 0 announces an empty graph", 0);
    if (n > max_vertices)
        throw ParseError("graph6: byte 0 announces n=" + std::to_string(n) + ", max is 32", 0);

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() < expected)
        throw ParseError("graph6: truncated, expected " + std::to_string(expected) + " bytes, got " + std::to_string(text.size()), static_cast<long>(text.size()));
    if (text.size() > expected)
        throw ParseError("graph6: trailing data at byte " + std::to_string(expected), static_cast<long>(expected));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1)
                edges.push_back({i, j});
        }
    }
    if (bits % 6) {
        int byte = static_cast<unsigned char>(text[expected - 1]) - 63;
        int pad = 6 - static_cast<int>(bits % 6);
        if (byte & ((1 << pad) - 1))
            throw ParseError("graph6: nonzero padding bits in byte " + std::to_string(expected - 1), static_cast<long>(expected - 1));
    }
    return Graph::from_edges(n, edges);
}

auto to_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto e : es)
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

auto from_edge_list(std::string_view text) -> Graph
{
    std::istringstream in{std::string(text)};
    long n = 0, m = 0;
    if (! (in >> n >> m))
        throw ParseError("edge list: expected header \"n m\"", 0);
    if (n < 1 || n > max_vertices)
        throw ParseError("edge list: n=" + std::to_string(n) + " outside 1..32", 0);
    if (m < 0 || m > n * (n - 1) / 2)
        throw ParseError("edge list: m=" + std::to_string(m) + " impossible for n=" + std::to_string(n), 0);
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        auto at = static_cast<long>(in.tellg());
        if (! (in >> u >> v))
            throw ParseError("edge list: missing edge " + std::to_string(i), at);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v), at);
        edges.push_back(Edge::of(static_cast<int>(u), static_cast<int>(v)));
    }
    std::string rest;
    if (in >> rest)
        throw ParseError("edge list: trailing data \"" + rest + "\"", -1);
    return Graph::from_edges(static_cast<int>(n), edges);
}

} // namespace linkless
