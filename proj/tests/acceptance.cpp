// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "cli_runner.hpp"
#include "linkless/graph_io.hpp"
#include "linkless/harness.hpp"
#include "linkless/iso.hpp"
#include "linkless/linkedness.hpp"
#include "linkless/petersen.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace linkless;

namespace {

// Wall-clock limits, seconds.
constexpr double family_limit = 5;
constexpr double paley_limit = 10;
constexpr double coplanar_pair_limit = 60;
constexpr double theorem_limit = 300;
constexpr double oracle_limit = 120;

constexpr int theorem_trials = 1000;
constexpr int oracle_hosts = 10000;
constexpr int oracle_max_order = 7;
constexpr int property_samples = 500;

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Gate {
public:
    void run(int id, const std::string & name, double limit, const std::function<Outcome()> & body)
    {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        }
        catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limit > 0 && secs > limit) {
            o.pass = false;
            o.detail += " [over time limit " + std::to_string(static_cast<int>(limit)) + "s]";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.pass ? "PASS " : "FAIL ") << id << ' ' << name << ": " << o.detail << " (" << timing << ")" << std::endl;
        _ok &= o.pass;
    }

    auto ok() const -> bool { return _ok; }

private:
    bool _ok = true;
};

auto random_edges(int n, int m, std::mt19937_64 & rng) -> Graph
{
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(m);
    return Graph::from_edges(n, slots);
}

auto family_criterion() -> Outcome
{
    auto family = petersen_family_closure(0);
    bool ok = family.size() == 7;
    std::set<std::string> canon;
    for (const auto & m : family) {
        ok &= edge_count(m.graph) == 15;
        canon.insert(canonical_form(m.graph).graph6);
    }
    ok &= canon.size() == family.size();
    auto has = [&](const Graph & g) {
        return canon.count(canonical_form(g).graph6) == 1;
    };
    bool landmarks = has(Graph::complete(6)) && has(cone(Graph::complete_bipartite(3, 3))) && has(k44_minus_edge());
    bool petersen = false;
    for (const auto & m : family) {
        // Cubic on 10 vertices with no triangle or 4-cycle.
        if (m.graph.order() == 10 && min_degree(m.graph) == 3 && max_degree(m.graph) == 3)
            petersen |= srg_params(m.graph) == SrgParams{10, 3, 0, 1};
    }
    ok &= landmarks && petersen;
    return {ok, std::to_string(family.size()) + " members, " + std::to_string(canon.size()) + " classes, landmarks " + (landmarks && petersen ? "found" : "missing")};
}

auto paley_criterion() -> Outcome
{
    auto p = build_paley13();
    bool ok = edge_count(p) == 39 && min_degree(p) == 6 && max_degree(p) == 6;
    ok &= srg_params(p) == SrgParams{13, 6, 2, 3};
    ok &= are_isomorphic(p, complement(p));
    auto il = is_il(p);
    ok &= il.verdict == Verdict::IL && validate_model(*il.witness);
    auto cert = find_k7_contraction(p);
    bool disjoint = cert.contraction_edges.size() == 6;
    VertexSet used = 0;
    for (auto e : cert.contraction_edges) {
        disjoint &= p.has_edge(e) && (used & (bit(e.u) | bit(e.v))) == 0;
        used |= bit(e.u) | bit(e.v);
    }
    bool k7 = contract_in_order(p, cert.contraction_edges) == Graph::complete(7) && validate_model(cert.model);
    ok &= disjoint && k7;
    return {ok, "39 edges, 6-regular, (13,6,2,3), self-complementary, IL via " + il.witness_name + ", K7 by 6 disjoint contractions"};
}

auto coplanar_pair_criterion() -> Outcome
{
    auto core = search_coplanar_core_8();
    bool ok = is_planar(core).planar && is_planar(complement(core)).planar;
    auto pair = build_figure1_pair(core);
    ok &= pair.g.order() == 10;
    ok &= is_il(pair.g).verdict == Verdict::NIL && is_il(pair.cg).verdict == Verdict::NIL;
    return {ok, "core " + to_graph6(core) + ", G = " + to_graph6(pair.g) + ", G and cG NIL"};
}

auto theorem_criterion() -> Outcome
{
    auto report = sample_theorem_13(theorem_trials, default_theorem_seed);
    int neither = 0;
    for (const auto & r : report.records)
        neither += r.verdict == IlSide::NEITHER;
    std::ostringstream d;
    d << report.passed << "/" << report.trials << " with an IL side, " << neither << " NEITHER (seed " << default_theorem_seed << ")";
    return {report.trials == theorem_trials && report.passed == theorem_trials && neither == 0, d.str()};
}

auto oracle_criterion() -> Outcome
{
    std::mt19937_64 rng(2024);
    const Graph patterns[] = {Graph::complete(4), Graph::complete(5), Graph::complete_bipartite(3, 3)};
    int disagreements = 0, invalid = 0, present = 0, checks = 0;
    for (int i = 0; i < oracle_hosts; ++i) {
        int n = 1 + static_cast<int>(rng() % oracle_max_order);
        std::bernoulli_distribution coin((1 + rng() % 9) / 10.0);
        auto host = Graph(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    host = host.with_edge(u, v);
        for (const auto & p : patterns) {
            bool expect = brute_force_has_minor(host, p);
            auto model = find_minor(host, p);
            disagreements += model.has_value() != expect;
            invalid += model && ! validate_model(*model);
            present += expect;
            ++checks;
        }
    }
    std::ostringstream d;
    d << oracle_hosts << " hosts x 3 patterns, " << disagreements << " disagreements, " << invalid << " invalid models, " << present << "/" << checks << " present";
    return {disagreements == 0 && invalid == 0, d.str()};
}

auto property_criterion() -> Outcome
{
    std::mt19937_64 rng(77);
    std::ostringstream d;
    bool ok = true;
    auto suite = [&](const char * name, const std::function<bool()> & sample) {
        int fails = 0;
        for (int i = 0; i < property_samples; ++i)
            fails += ! sample();
        d << name << ' ' << property_samples - fails << '/' << property_samples << "; ";
        ok &= fails == 0;
    };

    suite("planar=>cG IL", [&] {
        int n = 10 + static_cast<int>(rng() % 4);
        auto g = random_planar(n, 0.3 + (rng() % 8) / 10.0, rng);
        return is_planar(g).planar && is_il(complement(g)).verdict == Verdict::IL;
    });

    suite("9-vertex nonplanar side", [&] {
        auto g = rng() % 2 ? random_graph(9, rng) : random_planar(9, 0.5 + (rng() % 6) / 10.0, rng);
        return ! is_planar(g).planar || ! is_planar(complement(g)).planar;
    });

    suite("contraction complement", [&] {
        auto g = random_graph(13, rng);
        auto edges = g.edges();
        auto e = edges[rng() % edges.size()];
        auto h = contract_edge(g, e);
        auto ch = complement(h);
        auto cg = complement(g);
        for (auto f : ch.edges())
            if (! cg.adjacent(ch.label(f.u), ch.label(f.v)))
                return false;
        return true;
    });

    suite("cone consistency", [&] {
        int n = 1 + static_cast<int>(rng() % 9);
        auto g = rng() % 2 ? random_graph(n, rng) : (n >= 3 ? random_planar(n, 0.6 + (rng() % 5) / 10.0, rng) : Graph(n));
        return cone_nil_iff_base_planar_check(g);
    });

    suite("4n-9 edges => IL", [&] {
        int n = 6 + static_cast<int>(rng() % 8);
        int top = n * (n - 1) / 2;
        int m = 4 * n - 9 + static_cast<int>(rng() % (top - (4 * n - 9) + 1));
        auto g = random_edges(n, m, rng);
        return edge_bound_il(g) && is_il(g).verdict == Verdict::IL;
    });

    suite("maxdeg<=5 arithmetic", [&] {
        // Random edges kept only while both ends stay at degree <= 5.
        auto g = Graph(13);
        std::vector<Edge> slots;
        for (int u = 0; u < 13; ++u)
            for (int v = u + 1; v < 13; ++v)
                slots.push_back({u, v});
        std::shuffle(slots.begin(), slots.end(), rng);
        int keep = static_cast<int>(rng() % 40);
        for (auto e : slots) {
            if (keep-- <= 0)
                break;
            if (degree(g, e.u) < 5 && degree(g, e.v) < 5)
                g = g.with_edge(e.u, e.v);
        }
        auto cg = complement(g);
        return max_degree(g) <= 5 && edge_count(g) <= 32 && edge_count(cg) >= 46 && edge_bound_il(cg) && is_il(cg).verdict == Verdict::IL;
    });

    return {ok, d.str()};
}

auto hunt_criterion() -> Outcome
{
    std::ostringstream d;
    bool ok = true;
    auto ten = hunt_bicomplementary_nil(10);
    bool verified = ! ten.found.empty();
    for (const auto & g : ten.found)
        verified &= is_il(g).verdict == Verdict::NIL && is_il(complement(g)).verdict == Verdict::NIL;
    ok &= verified && ! ten.inconclusive;
    d << "n=10 found " << ten.found.size() << (verified ? " (both sides NIL)" : " (NOT verified)");
    for (int n : {11, 12}) {
        auto r = hunt_bicomplementary_nil(n);
        bool honest = r.iterations == default_hunt_budget && r.inconclusive == r.found.empty();
        for (const auto & g : r.found)
            honest &= is_il(g).verdict == Verdict::NIL && is_il(complement(g)).verdict == Verdict::NIL;
        ok &= honest;
        d << "; n=" << n << " found " << r.found.size() << (r.inconclusive ? " (inconclusive)" : "");
    }
    return {ok, d.str()};
}

auto cli_criterion() -> Outcome
{
    using support::run_cli;
    std::ostringstream d;
    bool ok = true;
    auto expect = [&](const char * what, bool cond) {
        if (! cond) {
            d << what << " failed; ";
            ok = false;
        }
    };

    auto k6 = run_cli("il-check 'E~~w'");
    expect("il-check K6", k6.code == 10 && k6.out.rfind("IL (witness: K6)\n", 0) == 0);
    expect("il-check K5", run_cli("il-check 'D~{'").code == 0);
    auto pair = run_cli("pair '" + to_graph6(Graph(13)) + "'");
    expect("pair empty", pair.code == 0 && pair.out.rfind("cG IL via edge-bound\n", 0) == 0);

    auto cert_path = std::string(LINKLESS_TMP_DIR) + "/acceptance_k6.cert";
    std::ofstream(cert_path) << k6.out.substr(k6.out.find('\n') + 1);
    expect("verify-cert", run_cli("verify-cert '" + cert_path + "'").code == 0);

    auto comp = run_cli("complement 'LlthgsL`mEkLkL'");
    expect("graph6 round trip", comp.code == 0 && are_isomorphic(from_graph6(comp.out.substr(0, comp.out.size() - 1)), build_paley13()));

    auto bad = run_cli("il-check 'E~'");
    expect("malformed exit 2", bad.code == 2 && bad.out.find("byte") != std::string::npos);
    expect("unknown subcommand", run_cli("nope").code == 2);

    auto paper = run_cli("verify-paper --trials 1000 --seed 7");
    expect("verify-paper", paper.code == 0 && paper.out.find("[FAIL]") == std::string::npos);
    if (ok)
        d << "exit codes 10/0/2 as documented, certificate and graph6 round trips, verify-paper --trials 1000 --seed 7 exit 0";
    return {ok, d.str()};
}

} // namespace

int main()
{
    Gate gate;
    gate.run(1, "petersen-family", family_limit, family_criterion);
    gate.run(2, "paley13", paley_limit, paley_criterion);
    gate.run(3, "coplanar-pair", coplanar_pair_limit, coplanar_pair_criterion);
    gate.run(4, "theorem-sampling", theorem_limit, theorem_criterion);
    gate.run(5, "minor-oracle-equivalence", oracle_limit, oracle_criterion);
    gate.run(6, "property-suites", 0, property_criterion);
    gate.run(7, "hunt-sanity", 0, hunt_criterion);
    gate.run(8, "cli-contract", 0, cli_criterion);
    return gate.ok() ? 0 : 1;
}
