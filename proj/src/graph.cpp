#include "linkless/graph.hpp"

#include <algorithm>
#include <string>

namespace linkless {

auto to_string(ErrorKind kind) -> const char *
{
    switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::NotDegreeThree: return "NotDegreeThree";
    case ErrorKind::NoCertificate: return "NoCertificate";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::CoreRejected: return "CoreRejected";
    case ErrorKind::ConstructionFalsified: return "ConstructionFalsified";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::TheoremViolated: return "TheoremViolated";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

auto Edge::of(int a, int b) -> Edge
{
    if (a == b)
        throw Error(ErrorKind::NotAnEdge, "loop " + std::to_string(a) + "-" + std::to_string(b));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n)
{
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "graph needs at least one vertex");
    if (n > max_vertices)
        throw Error(ErrorKind::CapacityExceeded, "at most 32 vertices supported, got " + std::to_string(n));
    _n = n;
    for (int v = 0; v < n; ++v)
        _labels[v] = static_cast<std::int8_t>(v);
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    Graph g(n);
    for (auto e : edges) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        if (e.u == e.v)
            throw Error(ErrorKind::NotAnEdge, "loop at " + std::to_string(e.u));
        g._adj[e.u] |= bit(e.v);
        g._adj[e.v] |= bit(e.u);
    }
    return g;
}

auto Graph::from_edges(int n, std::initializer_list<Edge> edges) -> Graph
{
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

auto Graph::from_rows(std::span<const VertexSet> rows) -> Graph
{
    Graph g(static_cast<int>(rows.size()));
    auto mask = g.vertices();
    for (int v = 0; v < g._n; ++v) {
        auto row = rows[v];
        if (row & ~mask)
            throw Error(ErrorKind::OutOfRange, "adjacency row " + std::to_string(v) + " has bits beyond n");
        if (row & bit(v))
            throw Error(ErrorKind::NotAnEdge, "loop at " + std::to_string(v));
        g._adj[v] = row;
    }
    for (int v = 0; v < g._n; ++v)
        for_each_vertex(g._adj[v], [&](int u) {
            if (! (g._adj[u] & bit(v)))
                throw Error(ErrorKind::NotAnEdge, "asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
        });
    return g;
}

auto Graph::complete(int n) -> Graph
{
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g._adj[v] = g.vertices() & ~bit(v);
    return g;
}

auto Graph::cycle(int n) -> Graph
{
    if (n < 3)
        throw Error(ErrorKind::OutOfRange, "cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        es.push_back(Edge::of(v, (v + 1) % n));
    return from_edges(n, es);
}

auto Graph::complete_bipartite(int a, int b) -> Graph
{
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            es.push_back({u, v});
    return from_edges(a + b, es);
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= _n)
        throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(_n));
}

auto Graph::neighbors(int v) const -> VertexSet
{
    check_vertex(v);
    return _adj[v];
}

auto Graph::adjacent(int u, int v) const -> bool
{
    check_vertex(u);
    check_vertex(v);
    return _adj[u] & bit(v);
}

auto Graph::has_edge(Edge e) const -> bool
{
    return e.u != e.v && adjacent(e.u, e.v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (int u = 0; u < _n; ++u)
        for_each_vertex(_adj[u] & ~first_n(u + 1), [&](int v) { result.push_back({u, v}); });
    return result;
}

auto Graph::label(int v) const -> int
{
    check_vertex(v);
    return _labels[v];
}

auto Graph::index_of_label(int label) const -> int
{
    for (int v = 0; v < _n; ++v)
        if (_labels[v] == label)
            return v;
    return -1;
}

auto Graph::with_edge(int u, int v) const -> Graph
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error(ErrorKind::NotAnEdge, "loop at " + std::to_string(u));
    Graph g = *this;
    g._adj[u] |= bit(v);
    g._adj[v] |= bit(u);
    return g;
}

auto Graph::without_edge(int u, int v) const -> Graph
{
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g._adj[u] &= ~bit(v);
    g._adj[v] &= ~bit(u);
    return g;
}

auto Graph::with_labels(std::span<const std::int8_t> labels) const -> Graph
{
    if (static_cast<int>(labels.size()) != _n)
        throw Error(ErrorKind::OutOfRange, "label count does not match vertex count");
    Graph g = *this;
    std::copy(labels.begin(), labels.end(), g._labels.begin());
    return g;
}

auto operator==(const Graph & a, const Graph & b) -> bool
{
    return a._n == b._n && std::equal(a._adj.begin(), a._adj.begin() + a._n, b._adj.begin());
}

auto complement(const Graph & g) -> Graph
{
    Graph result = g;
    auto all = g.vertices();
    for (int v = 0; v < g._n; ++v)
        result._adj[v] = all & ~g._adj[v] & ~bit(v);
    return result;
}

namespace {

    // Move vertex `from` into slot `to` (to < from), dropping whatever was
    // in `to`. Only used with from == n-1 after the old `to` is detached.
    void move_slot(std::array<VertexSet, max_vertices> & adj, int n, int from, int to)
    {
        adj[to] = adj[from];
        for (int w = 0; w < n; ++w) {
            if (adj[w] & bit(from))
                adj[w] = (adj[w] & ~bit(from)) | bit(to);
        }
        adj[from] = 0;
    }

}

auto delete_vertex(const Graph & g, int v) -> Graph
{
    g.check_vertex(v);
    if (g._n == 1)
        throw Error(ErrorKind::EmptySet, "cannot delete the only vertex");
    Graph result = g;
    auto & adj = result._adj;
    for (int w = 0; w < g._n; ++w)
        adj[w] &= ~bit(v);
    adj[v] = 0;
    int last = g._n - 1;
    if (v != last) {
        move_slot(adj, g._n, last, v);
        result._labels[v] = result._labels[last];
    }
    result._n = last;
    return result;
}

auto contract_edge(const Graph & g, Edge e) -> Graph
{
    if (e.u > e.v)
        std::swap(e.u, e.v);
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (! g.has_edge(e))
        throw Error(ErrorKind::NotAnEdge, "no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    Graph result = g;
    auto & adj = result._adj;
    auto merged = (g._adj[e.u] | g._adj[e.v]) & ~bit(e.u) & ~bit(e.v);
    for (int w = 0; w < g._n; ++w)
        adj[w] &= ~bit(e.v);
    adj[e.v] = 0;
    adj[e.u] = merged;
    for_each_vertex(merged, [&](int w) { adj[w] |= bit(e.u); });
    int last = g._n - 1;
    if (e.v != last) {
        move_slot(adj, g._n, last, e.v);
        result._labels[e.v] = result._labels[last];
    }
    result._n = last;
    return result;
}

auto delete_edge(const Graph & g, Edge e) -> Graph
{
    if (! g.has_edge(e))
        throw Error(ErrorKind::NotAnEdge, "no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    return g.without_edge(e.u, e.v);
}

auto induced(const Graph & g, VertexSet s) -> Graph
{
    if (s & ~g.vertices())
        throw Error(ErrorKind::OutOfRange, "vertex set exceeds graph");
    if (! s)
        throw Error(ErrorKind::EmptySet, "induced subgraph of the empty set");
    std::array<int, max_vertices> index{};
    int k = 0;
    for_each_vertex(s, [&](int v) { index[v] = k++; });
    Graph result(k);
    for_each_vertex(s, [&](int v) {
        VertexSet row = 0;
        for_each_vertex(g._adj[v] & s, [&](int w) { row |= bit(index[w]); });
        result._adj[index[v]] = row;
        result._labels[index[v]] = g._labels[v];
    });
    return result;
}

auto cone(const Graph & g) -> Graph
{
    if (g._n >= max_vertices)
        throw Error(ErrorKind::CapacityExceeded, "cone would exceed 32 vertices");
    Graph result = g;
    int apex = g._n;
    result._n = g._n + 1;
    result._adj[apex] = g.vertices();
    for (int v = 0; v < g._n; ++v)
        result._adj[v] |= bit(apex);
    std::int8_t fresh = 0;
    for (int v = 0; v < g._n; ++v)
        fresh = std::max<std::int8_t>(fresh, static_cast<std::int8_t>(g._labels[v] + 1));
    result._labels[apex] = fresh;
    return result;
}

auto permute(const Graph & g, std::span<const int> perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g._n)
        throw Error(ErrorKind::OutOfRange, "permutation size does not match vertex count");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= g._n || (seen & bit(p)))
            throw Error(ErrorKind::OutOfRange, "not a permutation");
        seen |= bit(p);
    }
    Graph result(g._n);
    for (int v = 0; v < g._n; ++v) {
        VertexSet row = 0;
        for_each_vertex(g._adj[v], [&](int w) { row |= bit(perm[w]); });
        result._adj[perm[v]] = row;
        result._labels[perm[v]] = g._labels[v];
    }
    return result;
}

auto degree(const Graph & g, int v) -> int
{
    return popcount(g.neighbors(v));
}

auto max_degree(const Graph & g) -> int
{
    int best = 0;
    for (auto row : g.rows())
        best = std::max(best, popcount(row));
    return best;
}

auto min_degree(const Graph & g) -> int
{
    int best = max_vertices;
    for (auto row : g.rows())
        best = std::min(best, popcount(row));
    return best;
}

auto edge_count(const Graph & g) -> int
{
    int total = 0;
    for (auto row : g.rows())
        total += popcount(row);
    return total / 2;
}

auto degree_sequence(const Graph & g) -> std::vector<int>
{
    std::vector<int> result;
    for (auto row : g.rows())
        result.push_back(popcount(row));
    std::sort(result.begin(), result.end(), std::greater<>());
    return result;
}

auto neighborhood(const Graph & g, int v) -> Graph
{
    return induced(g, g.neighbors(v) | bit(v));
}

auto srg_params(const Graph & g) -> std::optional<SrgParams>
{
    int n = g.order();
    if (n < 3)
        return std::nullopt;
    auto rows = g.rows();
    int k = popcount(rows[0]);
    if (k == 0 || k == n - 1)
        return std::nullopt;
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u) {
        if (popcount(rows[u]) != k)
            return std::nullopt;
        for (int v = u + 1; v < n; ++v) {
            int common = popcount(rows[u] & rows[v]);
            int & slot = (rows[u] & bit(v)) ? lambda : mu;
            if (slot == -1)
                slot = common;
            else if (slot != common)
                return std::nullopt;
        }
    }
    return SrgParams{n, k, lambda, mu};
}

auto is_spanning_subgraph(const Graph & sub, const Graph & g) -> bool
{
    if (sub.order() != g.order())
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (sub.rows()[v] & ~g.rows()[v])
            return false;
    return true;
}

auto component_of(const Graph & g, int v, VertexSet within) -> VertexSet
{
    VertexSet seen = bit(v), frontier = bit(v);
    auto rows = g.rows();
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int w) { next |= rows[w]; });
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

auto is_connected(const Graph & g, VertexSet within) -> bool
{
    if (! within)
        return false;
    return component_of(g, lowest(within), within) == within;
}

} // namespace linkless
