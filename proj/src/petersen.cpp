#include "linkless/petersen.hpp"
#include "linkless/iso.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace linkless {

auto delta_y(const Graph & g, std::array<int, 3> triangle) -> Graph
{
    auto [a, b, c] = triangle;
    for (int v : triangle)
        if (v < 0 || v >= g.order())
            throw Error(ErrorKind::OutOfRange, "triangle vertex " + std::to_string(v) + " out of range");
    if (a == b || b == c || a == c || ! g.adjacent(a, b) || ! g.adjacent(b, c) || ! g.adjacent(a, c))
        throw Error(ErrorKind::NotATriangle, "vertices do not form a triangle");
    if (g.order() >= max_vertices)
        throw Error(ErrorKind::CapacityExceeded, "delta-Y would exceed 32 vertices");

    auto result = cone(g.without_edge(a, b).without_edge(b, c).without_edge(a, c));
    int hub = g.order();
    for (int v = 0; v < g.order(); ++v)
        if (v != a && v != b && v != c)
            result = result.without_edge(v, hub);
    return result;
}

auto y_delta(const Graph & g, int center) -> Graph
{
    if (degree(g, center) != 3)
        throw Error(ErrorKind::NotDegreeThree, "vertex " + std::to_string(center) + " does not have degree 3");
    auto nb = g.neighbors(center);
    int a = lowest(nb);
    nb &= nb - 1;
    int b = lowest(nb);
    nb &= nb - 1;
    int c = lowest(nb);
    auto joined = g.with_edge(a, b).with_edge(b, c).with_edge(a, c);
    // Remove the centre with order-preserving renumbering.
    return induced(joined, g.vertices() & ~bit(center));
}

auto petersen_graph() -> Graph
{
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(Edge::of(i, (i + 1) % 5));
        es.push_back(Edge::of(i, i + 5));
        es.push_back(Edge::of(5 + i, 5 + (i + 2) % 5));
    }
    return Graph::from_edges(10, es);
}

auto k44_minus_edge() -> Graph
{
    auto g = Graph::complete_bipartite(4, 4);
    return g.without_edge(0, 4);
}

namespace {

    auto neighbours_independent(const Graph & g, int v) -> bool
    {
        bool ok = true;
        for_each_vertex(g.neighbors(v), [&](int u) {
            if (g.neighbors(u) & g.neighbors(v))
                ok = false;
        });
        return ok;
    }

    auto moves_from(const Graph & g) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        int n = g.order();
        for (int a = 0; a < n; ++a)
            for_each_vertex(g.neighbors(a) & ~first_n(a + 1), [&](int b) {
                for_each_vertex(g.neighbors(a) & g.neighbors(b) & ~first_n(b + 1), [&](int c) {
                    out.push_back(delta_y(g, {a, b, c}));
                });
            });
        for (int v = 0; v < n; ++v)
            if (degree(g, v) == 3 && neighbours_independent(g, v))
                out.push_back(y_delta(g, v));
        return out;
    }

    auto name_for(const Graph & g, int unnamed_index) -> std::string
    {
        if (are_isomorphic(g, Graph::complete(6)))
            return "K6";
        if (are_isomorphic(g, cone(Graph::complete_bipartite(3, 3))))
            return "K331";
        if (are_isomorphic(g, k44_minus_edge()))
            return "K44_minus_e";
        if (are_isomorphic(g, petersen_graph()))
            return "PETERSEN";
        auto name = "G" + std::to_string(g.order());
        if (unnamed_index > 0)
            name += "_" + std::to_string(unnamed_index);
        return name;
    }

}

auto petersen_family_closure(unsigned order_seed) -> std::vector<FamilyMember>
{
    std::mt19937 rng(order_seed);
    std::map<std::string, Graph> seen;
    std::deque<Graph> pending;

    auto k6 = Graph::complete(6);
    seen.emplace(canonical_form(k6).graph6, k6);
    pending.push_back(k6);

    while (! pending.empty()) {
        std::size_t pick = order_seed ? rng() % pending.size() : 0;
        Graph g = pending[pick];
        pending.erase(pending.begin() + static_cast<long>(pick));
        auto next = moves_from(g);
        if (order_seed)
            std::shuffle(next.begin(), next.end(), rng);
        for (const auto & h : next) {
            if (h.order() > max_canonical_vertices)
                continue;
            auto key = canonical_form(h).graph6;
            if (seen.emplace(key, h).second)
                pending.push_back(h);
        }
    }

    std::vector<FamilyMember> members;
    for (const auto & [key, g] : seen)
        members.push_back({permute(g, canonical_form(g).perm), "", key});
    std::stable_sort(members.begin(), members.end(), [](const auto & a, const auto & b) {
        if (a.graph.order() != b.graph.order())
            return a.graph.order() < b.graph.order();
        return a.canonical < b.canonical;
    });

    std::map<int, int> unnamed_per_order;
    for (auto & m : members) {
        m.name = name_for(m.graph, 0);
        if (m.name.starts_with("G"))
            ++unnamed_per_order[m.graph.order()];
    }
    std::map<int, int> counter;
    for (auto & m : members)
        if (m.name.starts_with("G") && unnamed_per_order[m.graph.order()] > 1)
            m.name = name_for(m.graph, ++counter[m.graph.order()]);
    return members;
}

auto petersen_family() -> const std::vector<FamilyMember> &
{
    static const std::vector<FamilyMember> family = petersen_family_closure(0);
    return family;
}

} // namespace linkless
