#include "linkless/harness.hpp"
#include "linkless/graph_io.hpp"
#include "linkless/iso.hpp"
#include "linkless/petersen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

namespace linkless {

auto random_graph(int n, std::mt19937_64 & rng) -> Graph
{
    std::vector<Edge> es;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng() >> 63)
                es.push_back({i, j});
    return Graph::from_edges(n, es);
}

auto random_planar(int n, double keep, std::mt19937_64 & rng) -> Graph
{
    std::vector<Edge> es;
    if (n >= 2)
        es.push_back({0, 1});
    if (n >= 3) {
        es.push_back({0, 2});
        es.push_back({1, 2});
        std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
        for (int v = 3; v < n; ++v) {
            auto at = rng() % faces.size();
            auto [a, b, c] = faces[at];
            faces.erase(faces.begin() + static_cast<long>(at));
            faces.push_back({a, b, v});
            faces.push_back({b, c, v});
            faces.push_back({c, a, v});
            for (int u : {a, b, c})
                es.push_back(Edge::of(u, v));
        }
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Edge> kept;
    for (auto e : es)
        if (coin(rng) < keep)
            kept.push_back(Edge::of(relabel[e.u], relabel[e.v]));
    return Graph::from_edges(n, kept);
}

auto quadratic_residues(int p) -> std::vector<int>
{
    std::vector<int> squares;
    for (int x = 1; x < p; ++x)
        squares.push_back(x * x % p);
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
    return squares;
}

auto build_paley13() -> Graph
{
    static constexpr std::array residues = {1, 3, 4, 9, 10, 12};
    if (quadratic_residues(13) != std::vector<int>(residues.begin(), residues.end()))
        throw Error(ErrorKind::ConstructionFalsified, "quadratic residues mod 13 do not match the hardcoded set");
    std::vector<Edge> es;
    for (int i = 0; i < 13; ++i)
        for (int j = i + 1; j < 13; ++j)
            if (std::find(residues.begin(), residues.end(), (j - i) % 13) != residues.end())
                es.push_back({i, j});
    return Graph::from_edges(13, es);
}

auto contract_in_order(const Graph & g, std::span<const Edge> edges) -> Graph
{
    std::vector<std::int8_t> identity(g.order());
    std::iota(identity.begin(), identity.end(), std::int8_t{0});
    Graph h = g.with_labels(identity);
    for (auto e : edges) {
        int a = h.index_of_label(e.u), b = h.index_of_label(e.v);
        if (a < 0 || b < 0)
            throw Error(ErrorKind::NotAnEdge, "edge endpoint already merged away");
        h = contract_edge(h, Edge::of(a, b));
    }
    return h;
}

auto find_k7_contraction(const Graph & g) -> PaleyCertificate
{
    if (g.order() != 13)
        throw Error(ErrorKind::PreconditionFailed, "K7 contraction search needs 13 vertices");

    // Seven groups: six matched pairs plus one leftover vertex, every two
    // groups adjacent. Groups are opened at the lowest undecided vertex.
    std::vector<VertexSet> groups;
    std::vector<VertexSet> reach;
    bool single_used = false;

    auto rec = [&](auto & self, VertexSet undecided) -> bool {
        if (groups.size() == 7)
            return true;
        int v = lowest(undecided);
        auto attempt = [&](VertexSet group) {
            VertexSet around = 0;
            for_each_vertex(group, [&](int x) { around |= g.neighbors(x); });
            for (auto other : groups)
                if (! (around & other))
                    return false;
            groups.push_back(group);
            reach.push_back(around);
            bool ok = self(self, undecided & ~group);
            if (! ok) {
                groups.pop_back();
                reach.pop_back();
            }
            return ok;
        };
        bool found = false;
        for_each_vertex(g.neighbors(v) & undecided & ~bit(v), [&](int w) {
            if (! found)
                found = attempt(bit(v) | bit(w));
        });
        if (! found && ! single_used) {
            single_used = true;
            found = attempt(bit(v));
            if (! found)
                single_used = false;
        }
        return found;
    };

    if (! rec(rec, g.vertices()))
        throw Error(ErrorKind::NoCertificate, "no six disjoint edges contract to K7");

    PaleyCertificate cert{g, {}, g, {Graph::complete(7), g, {}}};
    for (auto group : groups)
        if (popcount(group) == 2)
            cert.contraction_edges.push_back(Edge::of(lowest(group), lowest(group & (group - 1))));
    std::sort(cert.contraction_edges.begin(), cert.contraction_edges.end());
    cert.resulting = contract_in_order(g, cert.contraction_edges);
    std::sort(groups.begin(), groups.end(), [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
    cert.model.branch_sets = groups;
    return cert;
}

auto coplanar_edge_count_admissible(const Graph & g) -> bool
{
    int m = edge_count(g);
    return g.order() == 8 && m >= 10 && m <= 18;
}

namespace {

    /// Number of Kuratowski patterns (K5, K33) present as minors on each
    /// side; zero iff both sides are planar.
    auto kuratowski_penalty(const Graph & g) -> int
    {
        static const Graph k5 = Graph::complete(5);
        static const Graph k33 = Graph::complete_bipartite(3, 3);
        auto cg = complement(g);
        int count = 0;
        for (const Graph * h : {&g, static_cast<const Graph *>(&cg)})
            for (const auto * p : {&k5, &k33})
                count += find_minor(*h, *p).has_value();
        return count;
    }

    auto random_with_edges(int n, int m, std::mt19937_64 & rng) -> Graph
    {
        std::vector<Edge> all;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                all.push_back({i, j});
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(m);
        return Graph::from_edges(n, all);
    }

}

auto search_coplanar_core_8(std::uint64_t seed, int restarts) -> Graph
{
    constexpr int steps = 60;
    std::mt19937_64 rng(seed);
    for (int r = 0; r < restarts; ++r) {
        int m = 10 + static_cast<int>(rng() % 9);
        auto g = random_with_edges(8, m, rng);
        int penalty = kuratowski_penalty(g);
        for (int s = 0; s < steps && penalty > 0; ++s) {
            // Move one edge to a non-edge; the count stays admissible.
            auto present = g.edges();
            auto absent = complement(g).edges();
            auto out = present[rng() % present.size()];
            auto in = absent[rng() % absent.size()];
            auto next = g.without_edge(out.u, out.v).with_edge(in.u, in.v);
            int next_penalty = kuratowski_penalty(next);
            if (next_penalty <= penalty) {
                g = next;
                penalty = next_penalty;
            }
        }
        if (penalty == 0 && coplanar_edge_count_admissible(g))
            return g;
    }
    throw Error(ErrorKind::SearchExhausted, "no coplanar 8-vertex core within " + std::to_string(restarts) + " restarts");
}

auto build_figure1_pair(const Graph & core) -> Figure1Pair
{
    if (core.order() != 8)
        throw Error(ErrorKind::CoreRejected, "core must have 8 vertices");
    if (! is_planar(core).planar)
        throw Error(ErrorKind::CoreRejected, "core is not planar");
    if (! is_planar(complement(core)).planar)
        throw Error(ErrorKind::CoreRejected, "core complement is not planar");

    std::vector<VertexSet> rows(10, 0);
    for (int v = 0; v < 8; ++v)
        rows[v] = core.neighbors(v) | bit(8);
    rows[8] = first_n(8);
    auto g = Graph::from_rows(rows);
    auto cg = complement(g);

    Figure1Pair pair{core, g, cg, is_il(g), is_il(cg)};
    if (pair.g_certificate.verdict == Verdict::IL || pair.cg_certificate.verdict == Verdict::IL)
        throw Error(ErrorKind::ConstructionFalsified, "a side of the ten-vertex pair is IL for core " + to_graph6(core));
    return pair;
}

auto to_string(NeighbourhoodShape s) -> const char *
{
    switch (s) {
    case NeighbourhoodShape::SixCycle: return "6-cycle";
    case NeighbourhoodShape::TwoTriangles: return "two triangles";
    case NeighbourhoodShape::Other: return "other";
    }
    return "?";
}

auto verify_case_k6_structure(const Graph & g) -> CaseK6Report
{
    if (g.order() != 13 || srg_params(g) != SrgParams{13, 6, 2, 3})
        throw Error(ErrorKind::PreconditionFailed, "needs a strongly regular (13,6,2,3) graph");

    CaseK6Report report;
    report.consistent = true;
    for (int v = 0; v < 13; ++v) {
        VertexStructure s;
        s.vertex = v;
        auto near = g.neighbors(v);
        auto far = g.vertices() & ~near & ~bit(v);
        auto inner = induced(g, near);
        s.neighbour_edges = edge_count(inner);
        s.far_edges = edge_count(induced(g, far));
        s.three_across = true;
        for_each_vertex(near | far, [&](int u) {
            int across = popcount(g.neighbors(u) & ((near & bit(u)) ? far : near));
            if (near & bit(u))
                s.cross_edges += across;
            if (across != 3)
                s.three_across = false;
        });
        if (s.neighbour_edges == 6 && min_degree(inner) == 2 && max_degree(inner) == 2)
            s.shape = is_connected(inner, inner.vertices()) ? NeighbourhoodShape::SixCycle : NeighbourhoodShape::TwoTriangles;
        if (s.neighbour_edges != 6 || s.far_edges != 9 || s.cross_edges != 18 || ! s.three_across || s.shape == NeighbourhoodShape::Other)
            report.consistent = false;
        report.vertices.push_back(s);
    }
    return report;
}

namespace {

    auto family_penalty(const Graph & g) -> int
    {
        auto cg = complement(g);
        int count = 0;
        for (const auto & member : petersen_family()) {
            count += find_minor(g, member.graph).has_value();
            count += find_minor(cg, member.graph).has_value();
        }
        return count;
    }

}

auto hunt_bicomplementary_nil(int n, long budget, std::uint64_t seed) -> HuntResult
{
    if (n < 10 || n > 12)
        throw Error(ErrorKind::OutOfRange, "hunt supports 10 <= n <= 12");

    HuntResult result;
    result.n = n;
    std::map<std::string, Graph> found;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    constexpr double start_temperature = 1.5;
    constexpr double cooling = 0.995;
    constexpr long restart_after = 600;

    Graph g = random_graph(n, rng);
    int penalty = family_penalty(g);
    double temperature = start_temperature;
    long since_restart = 0;

    for (long it = 0; it < budget; ++it) {
        ++result.iterations;
        if (penalty == 0) {
            auto canon = canonical_form(g);
            found.emplace(canon.graph6, permute(g, canon.perm));
        }
        if (penalty == 0 || since_restart >= restart_after) {
            g = random_graph(n, rng);
            penalty = family_penalty(g);
            temperature = start_temperature;
            since_restart = 0;
            continue;
        }

        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % (n - 1));
        if (v >= u)
            ++v;
        auto next = g.adjacent(u, v) ? g.without_edge(u, v) : g.with_edge(u, v);
        int next_penalty = family_penalty(next);
        int delta = next_penalty - penalty;
        if (delta <= 0 || coin(rng) < std::exp(-delta / temperature)) {
            g = next;
            penalty = next_penalty;
        }
        temperature = std::max(0.05, temperature * cooling);
        ++since_restart;
    }

    for (auto & [key, graph] : found)
        result.found.push_back(graph);
    result.inconclusive = result.found.empty();
    return result;
}

auto to_log_line(const TrialRecord & r) -> std::string
{
    std::ostringstream out;
    out << "seed=" << r.seed << " g6=" << r.graph6 << " verdict=" << to_string(r.verdict) << " rule=" << to_string(r.rule);
    return out.str();
}

auto trial_seed(std::uint64_t seed, int i) -> std::uint64_t
{
    // splitmix64 of (seed, i)
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(i) + 1;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

auto sample_theorem_13(int trials, std::uint64_t seed, int threads) -> TheoremReport
{
    if (trials < 1)
        throw Error(ErrorKind::OutOfRange, "need at least one trial");
    petersen_family();

    std::vector<TrialRecord> records(trials);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (int i = next++; i < trials; i = next++) try {
            TrialRecord & r = records[i];
            r.seed = trial_seed(seed, i);
            std::mt19937_64 rng(r.seed);
            auto g = random_graph(13, rng);
            auto verdict = pair_verdict(g);
            r.graph6 = to_graph6(g);
            r.verdict = verdict.il_side;
            r.rule = verdict.fired_rule;
        }
        catch (...) {
            std::lock_guard lock(failure_mutex);
            if (! failure)
                failure = std::current_exception();
            next = trials;
        }
    };
    int count = threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    count = std::min(count, trials);
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    TheoremReport report;
    report.trials = trials;
    for (const auto & r : records) {
        if (r.verdict == IlSide::NEITHER)
            throw Error(ErrorKind::TheoremViolated, "neither side intrinsically linked: " + r.graph6);
        ++report.passed;
        ++report.rule_counts[r.rule];
    }
    report.records = std::move(records);
    return report;
}

} // namespace linkless
