#include "linkless/minor.hpp"
#include "linkless/graph_io.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace linkless {

namespace {

    /// Host after removing structure no pattern of minimum degree >= 3 can
    /// use: vertices of degree <= 1 are deleted and degree-2 vertices are
    /// contracted into a neighbour. groups[r] lists the original host
    /// vertices folded into reduced vertex r (always connected in the host).
    struct Reduced {
        std::array<VertexSet, max_vertices> rows{};
        std::array<VertexSet, max_vertices> groups{};
        VertexSet alive = 0;
    };

    auto reduce(const Graph & host, bool suppress) -> Reduced
    {
        Reduced r;
        auto src = host.rows();
        r.alive = host.vertices();
        for (int v = 0; v < host.order(); ++v) {
            r.rows[v] = src[v];
            r.groups[v] = bit(v);
        }
        if (! suppress)
            return r;

        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < host.order(); ++v) {
                if (! (r.alive & bit(v)))
                    continue;
                int d = popcount(r.rows[v]);
                if (d <= 1) {
                    for_each_vertex(r.rows[v], [&](int u) { r.rows[u] &= ~bit(v); });
                    r.rows[v] = 0;
                    r.alive &= ~bit(v);
                    changed = true;
                }
                else if (d == 2) {
                    int u = lowest(r.rows[v]);
                    int w = lowest(r.rows[v] & ~bit(u));
                    r.rows[u] = (r.rows[u] & ~bit(v)) | bit(w);
                    r.rows[w] = (r.rows[w] & ~bit(v)) | bit(u);
                    r.rows[v] = 0;
                    r.groups[u] |= r.groups[v];
                    r.groups[v] = 0;
                    r.alive &= ~bit(v);
                    changed = true;
                }
            }
        }
        return r;
    }

    /**
     * Decide whether a pattern embeds as a minor by enumerating partitions
     * of the host into connected blocks, one block per pattern vertex, and
     * testing the quotient for a spanning copy of the pattern.
     *
     * A model can always be grown until it covers every host component it
     * touches, so each component is either wholly partitioned or left out.
     * Vertices are placed lowest-index first; each block is the connected
     * set grown around the lowest unplaced vertex.
     */
    class PartitionSearch {
    public:
        PartitionSearch(const Reduced & host, const Graph & pattern)
            : _rows(host.rows), _k(pattern.order()), _unassigned(host.alive)
        {
            auto prows = pattern.rows();
            for (int p = 0; p < _k; ++p) {
                _prows[p] = prows[p];
                _pdeg[p] = popcount(prows[p]);
            }
            _pdeg_sorted.assign(_pdeg.begin(), _pdeg.begin() + _k);
            std::sort(_pdeg_sorted.begin(), _pdeg_sorted.end(), std::greater<>());
            _pedges = edge_count(pattern);

            for_each_vertex(host.alive, [&](int v) {
                _component[v] = component_of_rows(v, host.alive);
            });

            // Pattern vertices in an order that keeps each one attached to
            // those already placed: highest degree first, then most placed
            // neighbours, then degree, then index.
            VertexSet placed = 0;
            for (int i = 0; i < _k; ++i) {
                int best = -1;
                for (int p = 0; p < _k; ++p) {
                    if (placed & bit(p))
                        continue;
                    if (best == -1)
                        best = p;
                    else {
                        int a = popcount(_prows[p] & placed), b = popcount(_prows[best] & placed);
                        if (a > b || (a == b && _pdeg[p] > _pdeg[best]))
                            best = p;
                    }
                }
                _porder[i] = best;
                placed |= bit(best);
            }
        }

        auto run() -> std::optional<std::vector<VertexSet>>
        {
            if (! extend())
                return std::nullopt;
            std::vector<VertexSet> result(_k);
            for (int p = 0; p < _k; ++p)
                result[p] = _blocks[_image[p]];
            return result;
        }

    private:
        auto component_of_rows(int v, VertexSet within) const -> VertexSet
        {
            VertexSet seen = bit(v), frontier = bit(v);
            while (frontier) {
                VertexSet next = 0;
                for_each_vertex(frontier, [&](int w) { next |= _rows[w]; });
                frontier = next & within & ~seen;
                seen |= frontier;
            }
            return seen;
        }

        auto count_components(VertexSet s) const -> int
        {
            int count = 0;
            while (s) {
                s &= ~component_of_rows(lowest(s), s);
                ++count;
            }
            return count;
        }

        auto extend() -> bool
        {
            int placed = static_cast<int>(_blocks.size());
            if (placed == _k)
                return ! (_unassigned & _used) && final_check();
            if (! _unassigned)
                return false;

            int v = lowest(_unassigned);
            VertexSet comp = _component[v];
            bool untouched = ! (_used & bit(v));
            int remaining = _k - placed;

            VertexSet saved_used = _used;
            _used |= comp;
            bool found = false;
            if (remaining == 1) {
                // The last block has to swallow everything still owed.
                VertexSet owed = _unassigned & _used;
                if (is_connected_rows(owed))
                    found = try_block(owed);
            }
            else {
                int limit = popcount(_unassigned) - (remaining - 1);
                if (limit >= 1)
                    found = grow(bit(v), _rows[v] & _unassigned, 0, limit);
            }
            _used = saved_used;
            if (found)
                return true;

            if (untouched) {
                _unassigned &= ~comp;
                found = extend();
                _unassigned |= comp;
            }
            return found;
        }

        auto is_connected_rows(VertexSet s) const -> bool
        {
            return s && component_of_rows(lowest(s), s) == s;
        }

        /// Every connected superset of s inside the unassigned vertices,
        /// each generated once.
        auto grow(VertexSet s, VertexSet frontier, VertexSet excluded, int limit) -> bool
        {
            if (try_block(s))
                return true;
            if (popcount(s) >= limit)
                return false;
            while (frontier) {
                int x = lowest(frontier);
                frontier &= ~bit(x);
                VertexSet bigger = s | bit(x);
                VertexSet next = (frontier | (_rows[x] & _unassigned)) & ~bigger & ~excluded;
                if (grow(bigger, next, excluded, limit))
                    return true;
                excluded |= bit(x);
            }
            return false;
        }

        auto try_block(VertexSet s) -> bool
        {
            int index = static_cast<int>(_blocks.size());
            VertexSet around = 0;
            for_each_vertex(s, [&](int v) { around |= _rows[v]; });
            around &= ~s;

            VertexSet qrow = 0;
            for (int i = 0; i < index; ++i)
                if (around & _blocks[i]) {
                    qrow |= bit(i);
                    _qadj[i] |= bit(index);
                }
            _blocks.push_back(s);
            _around.push_back(around);
            _qadj[index] = qrow;
            _unassigned &= ~s;

            bool found = feasible() && extend();

            _unassigned |= s;
            _blocks.pop_back();
            _around.pop_back();
            for_each_vertex(qrow, [&](int i) { _qadj[i] &= ~bit(index); });
            _qadj[index] = 0;
            return found;
        }

        auto feasible() const -> bool
        {
            int placed = static_cast<int>(_blocks.size());
            int remaining = _k - placed;
            if (popcount(_unassigned) < remaining)
                return false;
            VertexSet owed = _unassigned & _used;
            if (remaining == 0)
                return ! owed;
            if (count_components(owed) > remaining)
                return false;

            // Degree and edge upper bounds on the eventual quotient.
            std::array<int, max_vertices> bound{};
            int edges_now = 0, edges_later = 0;
            for (int i = 0; i < placed; ++i) {
                int now = popcount(_qadj[i]);
                int later = std::min(remaining, popcount(_around[i] & _unassigned));
                bound[i] = now + later;
                edges_now += now;
                edges_later += later;
            }
            if (edges_now / 2 + edges_later + remaining * (remaining - 1) / 2 < _pedges)
                return false;
            for (int i = placed; i < _k; ++i)
                bound[i] = _k - 1;
            std::sort(bound.begin(), bound.begin() + _k, std::greater<>());
            for (int i = 0; i < _k; ++i)
                if (bound[i] < _pdeg_sorted[i])
                    return false;
            return true;
        }

        auto final_check() -> bool
        {
            std::uint64_t key = 0;
            bool keyed = _k <= 11;
            if (keyed) {
                for (int j = 1; j < _k; ++j)
                    key = (key << j) | (_qadj[j] & first_n(j));
                if (_rejected.contains(key))
                    return false;
            }
            _image.fill(-1);
            if (embed(0, 0))
                return true;
            if (keyed)
                _rejected.insert(key);
            return false;
        }

        auto embed(int depth, VertexSet taken) -> bool
        {
            if (depth == _k)
                return true;
            int p = _porder[depth];
            VertexSet candidates = first_n(_k) & ~taken;
            for_each_vertex(_prows[p], [&](int q) {
                if (_image[q] >= 0)
                    candidates &= _qadj[_image[q]];
            });
            while (candidates) {
                int c = lowest(candidates);
                candidates &= candidates - 1;
                if (popcount(_qadj[c]) < _pdeg[p])
                    continue;
                _image[p] = c;
                if (embed(depth + 1, taken | bit(c)))
                    return true;
                _image[p] = -1;
            }
            return false;
        }

        std::array<VertexSet, max_vertices> _rows;
        int _k;
        std::array<VertexSet, max_vertices> _prows{};
        std::array<int, max_vertices> _pdeg{};
        std::vector<int> _pdeg_sorted;
        int _pedges = 0;
        std::array<int, max_vertices> _porder{};
        std::array<VertexSet, max_vertices> _component{};

        VertexSet _unassigned;
        VertexSet _used = 0;
        std::vector<VertexSet> _blocks;
        std::vector<VertexSet> _around;
        std::array<VertexSet, max_vertices> _qadj{};
        std::array<int, max_vertices> _image{};
        std::unordered_set<std::uint64_t> _rejected;
    };

}

auto find_minor(const Graph & host, const Graph & pattern) -> std::optional<MinorModel>
{
    int k = pattern.order();
    if (host.order() < k || edge_count(host) < edge_count(pattern))
        return std::nullopt;

    auto reduced = reduce(host, min_degree(pattern) >= 3);
    if (popcount(reduced.alive) < k)
        return std::nullopt;

    auto blocks = PartitionSearch(reduced, pattern).run();
    if (! blocks)
        return std::nullopt;

    MinorModel model{pattern, host, {}};
    for (auto block : *blocks) {
        VertexSet set = 0;
        for_each_vertex(block, [&](int r) { set |= reduced.groups[r]; });
        model.branch_sets.push_back(set);
    }
    return model;
}

auto validate_model(const MinorModel & m) -> bool
{
    const auto & host = m.host;
    const auto & pattern = m.pattern;
    if (static_cast<int>(m.branch_sets.size()) != pattern.order())
        return false;
    VertexSet seen = 0;
    for (auto set : m.branch_sets) {
        if (! set || (set & ~host.vertices()) || (set & seen))
            return false;
        if (! is_connected(host, set))
            return false;
        seen |= set;
    }
    for (auto e : pattern.edges()) {
        VertexSet reach = 0;
        for_each_vertex(m.branch_sets[e.u], [&](int v) { reach |= host.neighbors(v); });
        if (! (reach & m.branch_sets[e.v]))
            return false;
    }
    return true;
}

auto replay_model(const MinorModel & m) -> Graph
{
    if (! validate_model(m))
        throw Error(ErrorKind::InvalidModel, "minor model fails validation");

    int n = m.host.order();
    std::vector<std::int8_t> identity(n);
    std::iota(identity.begin(), identity.end(), std::int8_t{0});
    Graph g = m.host.with_labels(identity);

    VertexSet used = 0;
    for (auto set : m.branch_sets)
        used |= set;

    // Vertex deletions; labels keep track of who is who.
    for (int v = n - 1; v >= 0; --v)
        if (! (used & bit(v)))
            g = delete_vertex(g, g.index_of_label(v));

    // Contractions, one edge inside a branch set at a time.
    std::vector<int> survivor(m.branch_sets.size());
    for (std::size_t p = 0; p < m.branch_sets.size(); ++p) {
        VertexSet remaining = m.branch_sets[p];
        while (popcount(remaining) > 1) {
            bool contracted = false;
            for_each_vertex(remaining, [&](int a) {
                if (contracted)
                    return;
                for_each_vertex(remaining & ~bit(a), [&](int b) {
                    if (contracted)
                        return;
                    int ia = g.index_of_label(a), ib = g.index_of_label(b);
                    if (! g.adjacent(ia, ib))
                        return;
                    auto e = Edge::of(ia, ib);
                    int gone = g.label(e.v);
                    g = contract_edge(g, e);
                    remaining &= ~bit(gone);
                    contracted = true;
                });
            });
            if (! contracted)
                throw Error(ErrorKind::InvalidModel, "branch set is not connected");
        }
        survivor[p] = lowest(remaining);
    }

    std::vector<int> perm(g.order());
    for (std::size_t p = 0; p < survivor.size(); ++p)
        perm[g.index_of_label(survivor[p])] = static_cast<int>(p);
    return permute(g, perm);
}

auto brute_force_has_minor(const Graph & host, const Graph & pattern) -> bool
{
    int n = host.order(), k = pattern.order();
    if (n > 8)
        throw Error(ErrorKind::CapacityExceeded, "brute-force oracle supports hosts of at most 8 vertices");
    if (k > n)
        return false;

    // assignment[v] in -1 (unused) or a block id; block ids appear in order
    // of first use, so each unlabeled partition is visited once and every
    // labeling of its blocks is then tried explicitly.
    std::vector<int> assignment(n, -1);
    auto pattern_edges = pattern.edges();

    auto check = [&]() {
        std::vector<VertexSet> blocks(k, 0);
        for (int v = 0; v < n; ++v)
            if (assignment[v] >= 0)
                blocks[assignment[v]] |= bit(v);
        for (auto b : blocks)
            if (! is_connected(host, b))
                return false;
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        do {
            bool all = true;
            for (auto e : pattern_edges) {
                bool joined = false;
                for_each_vertex(blocks[order[e.u]], [&](int v) {
                    if (host.neighbors(v) & blocks[order[e.v]])
                        joined = true;
                });
                if (! joined) {
                    all = false;
                    break;
                }
            }
            if (all)
                return true;
        } while (std::next_permutation(order.begin(), order.end()));
        return false;
    };

    auto rec = [&](auto & self, int v, int blocks_used) -> bool {
        if (v == n)
            return blocks_used == k && check();
        if (k - blocks_used > n - v)
            return false;
        assignment[v] = -1;
        if (self(self, v + 1, blocks_used))
            return true;
        for (int b = 0; b < std::min(blocks_used + 1, k); ++b) {
            assignment[v] = b;
            if (self(self, v + 1, std::max(blocks_used, b + 1)))
                return true;
        }
        assignment[v] = -1;
        return false;
    };
    return rec(rec, 0, 0);
}

auto to_certificate(const MinorModel & m) -> std::string
{
    std::ostringstream out;
    out << to_graph6(m.pattern) << '\n' << to_graph6(m.host) << '\n';
    for (auto set : m.branch_sets) {
        bool first = true;
        for_each_vertex(set, [&](int v) {
            out << (first ? "" : " ") << v;
            first = false;
        });
        out << '\n';
    }
    return out.str();
}

auto from_certificate(std::string_view text) -> MinorModel
{
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    while (! lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.size() < 2)
        throw ParseError("certificate: need pattern and host graph6 lines", 0);

    auto pattern = from_graph6(lines[0]);
    auto host = from_graph6(lines[1]);
    MinorModel m{pattern, host, {}};
    for (std::size_t i = 2; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        VertexSet set = 0;
        std::string token;
        while (row >> token) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(token, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size() || v < 0 || v >= host.order())
                throw ParseError("certificate: line " + std::to_string(i + 1) + ": bad vertex \"" + token + "\"", -1);
            set |= bit(v);
        }
        m.branch_sets.push_back(set);
    }
    if (static_cast<int>(m.branch_sets.size()) != pattern.order())
        throw ParseError("certificate: expected " + std::to_string(pattern.order()) + " branch sets, got " + std::to_string(m.branch_sets.size()), -1);
    return m;
}

} // namespace linkless
