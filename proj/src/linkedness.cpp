#include "linkless/linkedness.hpp"
#include "linkless/graph_io.hpp"
#include "linkless/petersen.hpp"

namespace linkless {

auto to_string(Verdict v) -> const char *
{
    return v == Verdict::IL ? "IL" : "NIL";
}

auto to_string(IlSide s) -> const char *
{
    switch (s) {
    case IlSide::G: return "G";
    case IlSide::CG: return "cG";
    case IlSide::BOTH: return "both";
    case IlSide::NEITHER: return "neither";
    }
    return "?";
}

auto to_string(Rule r) -> const char *
{
    switch (r) {
    case Rule::EdgeBound: return "edge-bound";
    case Rule::DegreeApex: return "degree-apex";
    case Rule::ContractionApex: return "contraction-apex";
    case Rule::DegreeNine: return "degree-nine";
    case Rule::FullSearch: return "full-search";
    }
    return "?";
}

namespace {

    void check_size(const Graph & g, int limit, const char * what)
    {
        if (g.order() > limit)
            throw Error(ErrorKind::CapacityExceeded, std::string(what) + " supports at most " + std::to_string(limit) + " vertices, got " + std::to_string(g.order()));
    }

}

auto is_planar(const Graph & g) -> PlanarityResult
{
    check_size(g, max_decision_vertices, "is_planar");
    static const Graph k5 = Graph::complete(5);
    static const Graph k33 = Graph::complete_bipartite(3, 3);
    if (auto m = find_minor(g, k5))
        return {false, std::move(m), "K5"};
    if (auto m = find_minor(g, k33))
        return {false, std::move(m), "K33"};
    return {};
}

auto is_il(const Graph & g) -> LinkCertificate
{
    check_size(g, max_decision_vertices, "is_il");
    LinkCertificate cert;
    for (const auto & member : petersen_family()) {
        if (auto m = find_minor(g, member.graph)) {
            cert.verdict = Verdict::IL;
            cert.witness = std::move(m);
            cert.witness_name = member.name;
            return cert;
        }
    }
    for (const auto & member : petersen_family())
        cert.exhausted.push_back(member.name);
    return cert;
}

auto edge_bound_il(const Graph & g) -> bool
{
    int n = g.order();
    return n >= 6 && edge_count(g) >= 4 * n - 9;
}

auto cone_nil_iff_base_planar_check(const Graph & g) -> bool
{
    check_size(g, max_decision_vertices - 1, "cone check");
    return is_planar(g).planar == (is_il(cone(g)).verdict == Verdict::NIL);
}

namespace {

    enum class Side { Self, Complement };

    /// A vertex of degree >= 10 in h (n >= 11): h is IL when its link is
    /// non-planar (cone over a non-planar graph), otherwise the link's
    /// complement on >= 10 vertices is IL and sits inside the complement.
    auto degree_apex(const Graph & h) -> std::optional<Side>
    {
        if (h.order() < 11)
            return std::nullopt;
        for (int v = 0; v < h.order(); ++v) {
            if (degree(h, v) >= 10) {
                bool planar = is_planar(induced(h, h.neighbors(v))).planar;
                return planar ? Side::Complement : Side::Self;
            }
        }
        return std::nullopt;
    }

    /// One contraction in h (n >= 12) producing a vertex of degree >= 10.
    /// The contracted graph is a minor of h and its complement is a
    /// subgraph of the complement of h.
    auto contraction_apex(const Graph & h) -> std::optional<Side>
    {
        if (h.order() < 12)
            return std::nullopt;
        for (auto e : h.edges()) {
            auto merged = (h.neighbors(e.u) | h.neighbors(e.v)) & ~bit(e.u) & ~bit(e.v);
            if (popcount(merged) >= 10)
                return degree_apex(contract_edge(h, e));
        }
        return std::nullopt;
    }

    /// A vertex a of degree exactly 9 in h (n >= 12), every neighbour of
    /// which has at most one neighbour outside a's closed neighbourhood.
    /// Either the link of a is non-planar (h is IL), or its complement is
    /// non-planar and contracting a's complement-edges yields a cone over it.
    auto degree_nine(const Graph & h) -> std::optional<Side>
    {
        if (h.order() < 12)
            return std::nullopt;
        for (int a = 0; a < h.order(); ++a) {
            if (degree(h, a) != 9)
                continue;
            auto closed = h.neighbors(a) | bit(a);
            bool leaks = false;
            for_each_vertex(h.neighbors(a), [&](int v) {
                if (popcount(h.neighbors(v) & ~closed) >= 2)
                    leaks = true;
            });
            if (leaks)
                continue;
            bool planar = is_planar(induced(h, h.neighbors(a))).planar;
            return planar ? Side::Complement : Side::Self;
        }
        return std::nullopt;
    }

    auto certify(const Graph & g, const char * rule) -> LinkCertificate
    {
        auto cert = is_il(g);
        if (cert.verdict != Verdict::IL)
            throw Error(ErrorKind::ConstructionFalsified, std::string(rule) + " claimed IL but full search disagrees on " + to_graph6(g));
        return cert;
    }

}

auto pair_verdict(const Graph & g) -> PairVerdict
{
    check_size(g, max_decision_vertices, "pair_verdict");
    auto cg = complement(g);
    PairVerdict result;

    auto settle = [&](Side side, bool on_complement, Rule rule) {
        bool g_side = (side == Side::Self) != on_complement;
        result.fired_rule = rule;
        result.exhaustive = false;
        if (g_side) {
            result.il_side = IlSide::G;
            result.g_certificate = certify(g, to_string(rule));
        }
        else {
            result.il_side = IlSide::CG;
            result.cg_certificate = certify(cg, to_string(rule));
        }
        return result;
    };

    if (edge_bound_il(g))
        return settle(Side::Self, false, Rule::EdgeBound);
    if (edge_bound_il(cg))
        return settle(Side::Self, true, Rule::EdgeBound);

    using Path = std::optional<Side> (*)(const Graph &);
    const std::pair<Path, Rule> paths[] = {
        {degree_apex, Rule::DegreeApex},
        {contraction_apex, Rule::ContractionApex},
        {degree_nine, Rule::DegreeNine},
    };
    for (auto [path, rule] : paths) {
        if (auto side = path(g))
            return settle(*side, false, rule);
        if (auto side = path(cg))
            return settle(*side, true, rule);
    }

    result.fired_rule = Rule::FullSearch;
    result.exhaustive = true;
    result.g_certificate = is_il(g);
    result.cg_certificate = is_il(cg);
    bool g_il = result.g_certificate->verdict == Verdict::IL;
    bool cg_il = result.cg_certificate->verdict == Verdict::IL;
    result.il_side = g_il && cg_il ? IlSide::BOTH : g_il ? IlSide::G : cg_il ? IlSide::CG : IlSide::NEITHER;
    return result;
}

} // namespace linkless
