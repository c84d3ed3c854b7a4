#ifndef LINKLESS_GRAPH_HPP
#define LINKLESS_GRAPH_HPP

#include "linkless/error.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace linkless {

/// A set of vertex indices, one bit per vertex.
using VertexSet = std::uint32_t;

inline constexpr int max_vertices = 32;

constexpr auto bit(int v) -> VertexSet { return VertexSet{1} << v; }

constexpr auto lowest(VertexSet s) -> int { return std::countr_zero(s); }

constexpr auto popcount(VertexSet s) -> int { return std::popcount(s); }

/// All vertices below n.
constexpr auto first_n(int n) -> VertexSet
{
    return n >= max_vertices ? ~VertexSet{0} : bit(n) - 1;
}

/// Iterate the members of a VertexSet in ascending order.
template <typename F>
void for_each_vertex(VertexSet s, F && f)
{
    while (s) {
        f(lowest(s));
        s &= s - 1;
    }
}

/// An undirected edge, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    static auto of(int a, int b) -> Edge;

    friend auto operator==(const Edge &, const Edge &) -> bool = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Simple undirected graph on at most 32 vertices, adjacency held as one
 * machine word per vertex. Values are immutable: every operation below
 * returns a fresh graph.
 *
 * Each vertex also carries a label, the index it had in the graph the
 * value was ultimately derived from. Labels survive deletions and
 * contractions so certificates can be read against the original graph.
 * Labels do not take part in equality.
 */
class Graph {
public:
    /// Edgeless graph on n vertices, 1 <= n <= 32.
    explicit Graph(int n);

    static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
    static auto from_edges(int n, std::initializer_list<Edge> edges) -> Graph;

    /// Build from raw adjacency rows; rows must already be symmetric,
    /// loop-free and confined to the first n bits.
    static auto from_rows(std::span<const VertexSet> rows) -> Graph;

    static auto complete(int n) -> Graph;
    static auto cycle(int n) -> Graph;
    static auto complete_bipartite(int a, int b) -> Graph;

    auto order() const noexcept -> int { return _n; }
    auto vertices() const noexcept -> VertexSet { return first_n(_n); }
    auto neighbors(int v) const -> VertexSet;
    auto adjacent(int u, int v) const -> bool;
    auto has_edge(Edge e) const -> bool;
    auto edges() const -> std::vector<Edge>;
    auto rows() const noexcept -> std::span<const VertexSet> { return {_adj.data(), static_cast<std::size_t>(_n)}; }

    auto label(int v) const -> int;
    auto labels() const -> std::span<const std::int8_t> { return {_labels.data(), static_cast<std::size_t>(_n)}; }
    /// Current index of the vertex carrying `label`, or -1.
    auto index_of_label(int label) const -> int;

    auto with_edge(int u, int v) const -> Graph;
    auto without_edge(int u, int v) const -> Graph;
    auto with_labels(std::span<const std::int8_t> labels) const -> Graph;

    friend auto operator==(const Graph & a, const Graph & b) -> bool;

private:
    Graph() = default;

    void check_vertex(int v) const;

    int _n = 0;
    std::array<VertexSet, max_vertices> _adj{};
    std::array<std::int8_t, max_vertices> _labels{};

    friend auto contract_edge(const Graph &, Edge) -> Graph;
    friend auto delete_vertex(const Graph &, int) -> Graph;
    friend auto induced(const Graph &, VertexSet) -> Graph;
    friend auto cone(const Graph &) -> Graph;
    friend auto complement(const Graph &) -> Graph;
    friend auto permute(const Graph &, std::span<const int>) -> Graph;
};

struct SrgParams {
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;

    friend auto operator==(const SrgParams &, const SrgParams &) -> bool = default;
};

auto complement(const Graph & g) -> Graph;

/// Identify the endpoints of e. The merged vertex takes the slot of e.u
/// (the smaller endpoint) and keeps its label; the slot of e.v is filled
/// by the last vertex.
auto contract_edge(const Graph & g, Edge e) -> Graph;

/// Remove v; the last vertex moves into v's slot (same relabeling as
/// contract_edge, so the two line up index for index).
auto delete_vertex(const Graph & g, int v) -> Graph;
auto delete_edge(const Graph & g, Edge e) -> Graph;

/// Subgraph induced on s, vertices renumbered in ascending order.
auto induced(const Graph & g, VertexSet s) -> Graph;

/// g plus one new vertex (index n) adjacent to every old vertex.
auto cone(const Graph & g) -> Graph;

/// Relabel: vertex v of g becomes vertex perm[v] of the result.
auto permute(const Graph & g, std::span<const int> perm) -> Graph;

auto degree(const Graph & g, int v) -> int;
auto max_degree(const Graph & g) -> int;
auto min_degree(const Graph & g) -> int;
auto edge_count(const Graph & g) -> int;
auto degree_sequence(const Graph & g) -> std::vector<int>;

/// Subgraph induced on v and its neighbours.
auto neighborhood(const Graph & g, int v) -> Graph;

/// Strong regularity parameters; none for complete, empty, irregular or
/// fewer than three vertices.
auto srg_params(const Graph & g) -> std::optional<SrgParams>;

/// Is `sub` a subgraph of `g` on the same vertex indices?
auto is_spanning_subgraph(const Graph & sub, const Graph & g) -> bool;

auto is_connected(const Graph & g, VertexSet within) -> bool;
auto component_of(const Graph & g, int v, VertexSet within) -> VertexSet;

} // namespace linkless

#endif
