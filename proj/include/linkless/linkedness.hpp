#ifndef LINKLESS_LINKEDNESS_HPP
#define LINKLESS_LINKEDNESS_HPP

#include "linkless/graph.hpp"
#include "linkless/minor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linkless {

inline constexpr int max_decision_vertices = 13;

enum class Verdict { IL, NIL };

struct LinkCertificate {
    Verdict verdict = Verdict::NIL;
    /// IL only: the family member found as a minor and its model.
    std::optional<MinorModel> witness;
    std::string witness_name;
    /// NIL only: every family member, each ruled out by complete search.
    std::vector<std::string> exhausted;
};

struct PlanarityResult {
    bool planar = true;
    /// Non-planar only: a K5 or K33 minor model.
    std::optional<MinorModel> witness;
    std::string witness_name;
};

enum class IlSide { G, CG, BOTH, NEITHER };

/// Which argument settled a pair.
enum class Rule {
    EdgeBound,       // at least 4n-9 edges on one side
    DegreeApex,      // a vertex of degree >= 10, decided by its link's planarity
    ContractionApex, // one contraction creates such a vertex
    DegreeNine,      // a vertex of degree 9 whose neighbours barely leak
    FullSearch,      // both sides searched against every family member
};

struct PairVerdict {
    IlSide il_side = IlSide::NEITHER;
    Rule fired_rule = Rule::FullSearch;
    /// False when a fast path settled one side and the other side was not
    /// examined; il_side then names only the side proven IL.
    bool exhaustive = false;
    std::optional<LinkCertificate> g_certificate;
    std::optional<LinkCertificate> cg_certificate;
};

auto to_string(Verdict v) -> const char *;
auto to_string(IlSide s) -> const char *;
auto to_string(Rule r) -> const char *;

/// Planar iff neither K5 nor K33 is a minor. At most 13 vertices.
auto is_planar(const Graph & g) -> PlanarityResult;

/// Decide intrinsic linkedness against every Petersen-family member, tried
/// in family order; the witness is the first member that is a minor.
auto is_il(const Graph & g) -> LinkCertificate;

/// n >= 6 and at least 4n-9 edges.
auto edge_bound_il(const Graph & g) -> bool;

/// Does planarity of g agree with the cone over g being linklessly
/// embeddable? At most 12 vertices; expected to hold always.
auto cone_nil_iff_base_planar_check(const Graph & g) -> bool;

auto pair_verdict(const Graph & g) -> PairVerdict;

} // namespace linkless

#endif
