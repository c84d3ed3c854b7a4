#ifndef LINKLESS_HARNESS_HPP
#define LINKLESS_HARNESS_HPP

#include "linkless/graph.hpp"
#include "linkless/linkedness.hpp"
#include "linkless/minor.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace linkless {

inline constexpr std::uint64_t default_core_seed = 8;
inline constexpr std::uint64_t default_hunt_seed = 10;
inline constexpr std::uint64_t default_theorem_seed = 7;
inline constexpr long default_hunt_budget = 4000;
inline constexpr int default_core_budget = 500;

// ---- sampling -------------------------------------------------------------

/// Every labeled graph on n vertices equally likely.
auto random_graph(int n, std::mt19937_64 & rng) -> Graph;

/// A random maximal planar graph (repeated vertex insertion into a random
/// face of a triangulation), then each edge kept with probability `keep`.
auto random_planar(int n, double keep, std::mt19937_64 & rng) -> Graph;

// ---- Paley graph ----------------------------------------------------------

/// Nonzero squares modulo a prime, ascending.
auto quadratic_residues(int p) -> std::vector<int>;

/// Vertices 0..12, i ~ j iff i-j is a nonzero square mod 13.
auto build_paley13() -> Graph;

struct PaleyCertificate {
    Graph graph;
    /// Six pairwise disjoint edges of `graph`.
    std::vector<Edge> contraction_edges;
    /// Result of contracting them in order.
    Graph resulting;
    MinorModel model;
};

/// Contract the edges one after another, locating each endpoint by label
/// so later edges still refer to the original vertex numbers.
auto contract_in_order(const Graph & g, std::span<const Edge> edges) -> Graph;

/// First (in lexicographic vertex order) set of six disjoint edges of a
/// 13-vertex graph whose contraction is K7. Throws NoCertificate.
auto find_k7_contraction(const Graph & g) -> PaleyCertificate;

// ---- ten-vertex coplanar pair ----------------------------------------------

/// Both sides of an 8-vertex coplanar candidate need 10..18 edges.
auto coplanar_edge_count_admissible(const Graph & g) -> bool;

/// Restarted local search over 8-vertex graphs for one that is planar
/// with a planar complement. Throws SearchExhausted after `restarts`.
auto search_coplanar_core_8(std::uint64_t seed = default_core_seed, int restarts = default_core_budget) -> Graph;

struct Figure1Pair {
    Graph core;
    /// core on 0..7, vertex 8 joined to all of 0..7, vertex 9 isolated.
    Graph g;
    Graph cg;
    LinkCertificate g_certificate;
    LinkCertificate cg_certificate;
};

/// Throws CoreRejected for a bad core, ConstructionFalsified if a side
/// turns out IL.
auto build_figure1_pair(const Graph & core) -> Figure1Pair;

// ---- the 6-regular case ---------------------------------------------------

enum class NeighbourhoodShape { SixCycle, TwoTriangles, Other };

auto to_string(NeighbourhoodShape s) -> const char *;

struct VertexStructure {
    int vertex = 0;
    NeighbourhoodShape shape = NeighbourhoodShape::Other;
    int neighbour_edges = 0;  // inside the 6 neighbours
    int far_edges = 0;        // inside the 6 non-neighbours
    int cross_edges = 0;      // between the two
    bool three_across = false; // every one of the 12 sends exactly 3 across
};

struct CaseK6Report {
    std::vector<VertexStructure> vertices;
    /// 6 / 9 / 18 edge split and 3 crossings per vertex, everywhere.
    bool consistent = false;
};

/// Requires a 13-vertex graph with parameters (13,6,2,3); otherwise
/// PreconditionFailed.
auto verify_case_k6_structure(const Graph & g) -> CaseK6Report;

// ---- open-question hunt ---------------------------------------------------

struct HuntResult {
    int n = 0;
    long iterations = 0;
    /// Graphs with both sides NIL, one per isomorphism class, sorted by
    /// canonical string.
    std::vector<Graph> found;
    /// Nothing found: says nothing about existence.
    bool inconclusive = true;
};

/// Annealed edge flips minimising the number of family members that are
/// minors of g or of its complement. 10 <= n <= 12.
auto hunt_bicomplementary_nil(int n, long budget = default_hunt_budget, std::uint64_t seed = default_hunt_seed) -> HuntResult;

// ---- theorem sampling -----------------------------------------------------

struct TrialRecord {
    std::uint64_t seed = 0;
    std::string graph6;
    IlSide verdict = IlSide::NEITHER;
    Rule rule = Rule::FullSearch;
};

auto to_log_line(const TrialRecord & r) -> std::string;

struct TheoremReport {
    int trials = 0;
    int passed = 0;
    std::map<Rule, int> rule_counts;
    std::vector<TrialRecord> records;
};

/// Seed used for trial i of a run seeded with `seed`.
auto trial_seed(std::uint64_t seed, int i) -> std::uint64_t;

/// Uniform random 13-vertex graphs; every one must have an IL side.
/// Throws TheoremViolated naming the first offending graph.
/// threads == 0 uses the hardware concurrency.
auto sample_theorem_13(int trials, std::uint64_t seed = default_theorem_seed, int threads = 0) -> TheoremReport;

} // namespace linkless

#endif
