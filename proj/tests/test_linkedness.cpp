#include "linkless/graph_io.hpp"
#include "linkless/harness.hpp"
#include "linkless/linkedness.hpp"
#include "linkless/petersen.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace linkless;

TEST_CASE("planarity")
{
    CHECK(is_planar(Graph::complete(4)).planar);
    auto k5 = is_planar(Graph::complete(5));
    CHECK_FALSE(k5.planar);
    CHECK(k5.witness_name == "K5");
    auto k33 = is_planar(Graph::complete_bipartite(3, 3));
    CHECK_FALSE(k33.planar);
    CHECK(k33.witness_name == "K33");
    REQUIRE(k33.witness);
    CHECK(validate_model(*k33.witness));
    CHECK_FALSE(is_planar(petersen_graph()).planar);
    CHECK_THROWS_AS(is_planar(Graph(14)), Error);
}

TEST_CASE("is_il on landmarks")
{
    auto k6 = is_il(Graph::complete(6));
    CHECK(k6.verdict == Verdict::IL);
    CHECK(k6.witness_name == "K6");
    CHECK(is_il(petersen_graph()).witness_name == "PETERSEN");
    auto k5 = is_il(Graph::complete(5));
    CHECK(k5.verdict == Verdict::NIL);
    CHECK(k5.exhausted.size() == 7);
    auto paley = is_il(build_paley13());
    CHECK(paley.verdict == Verdict::IL);
    REQUIRE(paley.witness);
    CHECK(validate_model(*paley.witness));
    for (const auto & member : petersen_family())
        CHECK(is_il(member.graph).witness_name == member.name);
}

TEST_CASE("family members are minor-minimal")
{
    for (const auto & member : petersen_family()) {
        for (auto e : member.graph.edges()) {
            CHECK(is_il(delete_edge(member.graph, e)).verdict == Verdict::NIL);
            CHECK(is_il(contract_edge(member.graph, e)).verdict == Verdict::NIL);
        }
    }
}

TEST_CASE("edge bound")
{
    CHECK(edge_bound_il(Graph::complete(6)));
    std::mt19937_64 rng(51);
    auto with_edges = [&](int n, int m) {
        auto g = Graph(n);
        auto perm = support::random_perm(n * (n - 1) / 2, rng);
        std::vector<Edge> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots.push_back({u, v});
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i)
            edges.push_back(slots[perm[i]]);
        return Graph::from_edges(n, edges);
    };
    CHECK(edge_bound_il(with_edges(13, 46)));
    CHECK_FALSE(edge_bound_il(with_edges(13, 42)));
    CHECK(edge_bound_il(with_edges(13, 43)));
    CHECK_FALSE(edge_bound_il(Graph::complete(5)));
}

TEST_CASE("cone check")
{
    CHECK(cone_nil_iff_base_planar_check(Graph::complete(4)));
    CHECK(cone_nil_iff_base_planar_check(Graph::complete(5)));
    CHECK_THROWS_AS(cone_nil_iff_base_planar_check(Graph(13)), Error);
}

TEST_CASE("pair verdict on extremes")
{
    auto full = pair_verdict(Graph::complete(13));
    CHECK(full.il_side == IlSide::G);
    CHECK(full.fired_rule == Rule::EdgeBound);
    CHECK_FALSE(full.exhaustive);
    auto empty = pair_verdict(Graph(13));
    CHECK(empty.il_side == IlSide::CG);
    CHECK(empty.fired_rule == Rule::EdgeBound);
    REQUIRE(empty.cg_certificate);
    CHECK(empty.cg_certificate->witness_name == "K6");
    CHECK(std::string(to_string(Rule::ContractionApex)) == "contraction-apex");
    CHECK(std::string(to_string(IlSide::CG)) == "cG");
}

TEST_CASE("pair verdict on the 10-vertex pair")
{
    auto pair = build_figure1_pair(from_graph6("Gsfu@g"));
    auto v = pair_verdict(pair.g);
    CHECK(v.il_side == IlSide::NEITHER);
    CHECK(v.exhaustive);
    CHECK(v.fired_rule == Rule::FullSearch);
}

// Each fast path claims one side; full search on both sides must agree
// that side is IL. Fast paths only fire from n = 11 up, so sample there.
TEST_CASE("fast paths agree with full search")
{
    std::mt19937_64 rng(52);
    int fast = 0;
    for (int i = 0; i < 150; ++i) {
        int n = 11 + static_cast<int>(rng() % 3);
        auto g = support::random_graph(n, 0.25 + (rng() % 6) / 10.0, rng);
        auto v = pair_verdict(g);
        bool g_il = is_il(g).verdict == Verdict::IL;
        bool cg_il = is_il(complement(g)).verdict == Verdict::IL;
        CHECK((g_il || cg_il));
        if (v.il_side == IlSide::G)
            CHECK(g_il);
        if (v.il_side == IlSide::CG)
            CHECK(cg_il);
        if (v.exhaustive)
            CHECK(v.il_side == (g_il && cg_il ? IlSide::BOTH : g_il ? IlSide::G : IlSide::CG));
        fast += ! v.exhaustive;
    }
    CHECK(fast > 0);
}
