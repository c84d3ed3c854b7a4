#include "linkless/iso.hpp"
#include "linkless/graph_io.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace linkless {

namespace {

    using Rows = std::array<VertexSet, max_vertices>;
    using Perm = std::array<int, max_vertices>;
    using Cells = std::vector<VertexSet>;

    /// Split cells by neighbour counts into every cell until stable. Only the
    /// order of cells and the adjacency counts are consulted, so relabeling
    /// the graph relabels the result.
    auto refine(const Graph & g, Cells cells) -> Cells
    {
        auto rows = g.rows();
        while (true) {
            Cells next;
            next.reserve(cells.size());
            for (auto cell : cells) {
                if (popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> sig;
                for_each_vertex(cell, [&](int v) {
                    std::vector<int> counts(cells.size());
                    for (std::size_t c = 0; c < cells.size(); ++c)
                        counts[c] = popcount(rows[v] & cells[c]);
                    sig.emplace_back(std::move(counts), v);
                });
                std::sort(sig.begin(), sig.end());
                VertexSet part = 0;
                for (std::size_t i = 0; i < sig.size(); ++i) {
                    if (i > 0 && sig[i].first != sig[i - 1].first) {
                        next.push_back(part);
                        part = 0;
                    }
                    part |= bit(sig[i].second);
                }
                next.push_back(part);
            }
            if (next.size() == cells.size())
                return next;
            cells = std::move(next);
        }
    }

    /// Negative if a sorts before b in graph6 order.
    auto compare_rows(const Rows & a, const Rows & b, int n) -> int
    {
        for (int j = 1; j < n; ++j) {
            auto mask = first_n(j);
            auto ca = a[j] & mask, cb = b[j] & mask;
            if (ca != cb) {
                auto low = lowest(ca ^ cb);
                return (ca & bit(low)) ? 1 : -1;
            }
        }
        return 0;
    }

    class Canonizer {
    public:
        explicit Canonizer(const Graph & g) : _g(g), _n(g.order()) {}

        auto run() -> Perm
        {
            std::vector<int> prefix;
            visit(refine(_g, Cells{_g.vertices()}), prefix);
            return _best_perm;
        }

    private:
        void visit(const Cells & cells, std::vector<int> & prefix)
        {
            if (static_cast<int>(cells.size()) == _n) {
                leaf(cells);
                return;
            }

            std::size_t target = 0;
            int target_size = max_vertices + 1;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                int size = popcount(cells[c]);
                if (size > 1 && size < target_size) {
                    target = c;
                    target_size = size;
                }
            }

            VertexSet explored = 0;
            for_each_vertex(cells[target], [&](int w) {
                if (explored && (orbit_of(w, prefix) & explored))
                    return;
                explored |= bit(w);
                Cells child;
                child.reserve(cells.size() + 1);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (c == target) {
                        child.push_back(bit(w));
                        child.push_back(cells[c] & ~bit(w));
                    }
                    else
                        child.push_back(cells[c]);
                }
                prefix.push_back(w);
                visit(refine(_g, std::move(child)), prefix);
                prefix.pop_back();
            });
        }

        /// Orbit of w under the known automorphisms fixing every prefix vertex.
        auto orbit_of(int w, const std::vector<int> & prefix) const -> VertexSet
        {
            std::array<int, max_vertices> parent;
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            for (const auto & gamma : _automorphisms) {
                bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
                if (! fixes)
                    continue;
                for (int v = 0; v < _n; ++v)
                    parent[find(v)] = find(gamma[v]);
            }
            VertexSet orbit = 0;
            int root = find(w);
            for (int v = 0; v < _n; ++v)
                if (find(v) == root)
                    orbit |= bit(v);
            return orbit;
        }

        void leaf(const Cells & cells)
        {
            Perm perm{};
            for (int c = 0; c < _n; ++c)
                perm[lowest(cells[c])] = c;
            Rows rows{};
            auto src = _g.rows();
            for (int v = 0; v < _n; ++v) {
                VertexSet row = 0;
                for_each_vertex(src[v], [&](int u) { row |= bit(perm[u]); });
                rows[perm[v]] = row;
            }
            if (! _have_best) {
                _have_best = true;
                _best_rows = rows;
                _best_perm = perm;
                return;
            }
            int cmp = compare_rows(rows, _best_rows, _n);
            if (cmp < 0) {
                _best_rows = rows;
                _best_perm = perm;
            }
            else if (cmp == 0) {
                Perm inverse{};
                for (int v = 0; v < _n; ++v)
                    inverse[_best_perm[v]] = v;
                Perm gamma{};
                for (int v = 0; v < _n; ++v)
                    gamma[v] = inverse[perm[v]];
                _automorphisms.push_back(gamma);
            }
        }

        const Graph & _g;
        int _n;
        bool _have_best = false;
        Rows _best_rows{};
        Perm _best_perm{};
        std::vector<Perm> _automorphisms;
    };

    auto canonical_unchecked(const Graph & g) -> CanonicalForm
    {
        auto perm = Canonizer(g).run();
        CanonicalForm result;
        result.perm.assign(perm.begin(), perm.begin() + g.order());
        result.graph6 = to_graph6(permute(g, result.perm));
        return result;
    }

}

auto canonical_form(const Graph & g) -> CanonicalForm
{
    if (g.order() > max_canonical_vertices)
        throw Error(ErrorKind::CapacityExceeded, "canonical form supports at most 13 vertices, got " + std::to_string(g.order()));
    return canonical_unchecked(g);
}

auto are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || edge_count(a) != edge_count(b))
        return false;
    if (degree_sequence(a) != degree_sequence(b))
        return false;
    return canonical_unchecked(a).graph6 == canonical_unchecked(b).graph6;
}

} // namespace linkless
