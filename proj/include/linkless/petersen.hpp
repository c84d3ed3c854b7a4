#ifndef LINKLESS_PETERSEN_HPP
#define LINKLESS_PETERSEN_HPP

#include "linkless/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace linkless {

struct FamilyMember {
    Graph graph;
    /// K6, K331, K44_minus_e, PETERSEN, or G<n> for the unnamed members.
    std::string name;
    std::string canonical;
};

/// Replace the triangle a,b,c by a new vertex (index n) joined to a, b, c.
auto delta_y(const Graph & g, std::array<int, 3> triangle) -> Graph;

/// Remove a degree-3 vertex and join its neighbours pairwise. Edges that
/// already exist collapse, so the edge count can drop.
auto y_delta(const Graph & g, int center) -> Graph;

/**
 * The seven forbidden minors for linkless embeddability, generated as the
 * closure of K6 under delta_y on every triangle and y_delta on every
 * degree-3 vertex with pairwise non-adjacent neighbours. Ordered by vertex
 * count, then canonical string, so K6 comes first. Computed once.
 */
auto petersen_family() -> const std::vector<FamilyMember> &;

/// Closure with an explicit work-queue discipline; `order_seed` shuffles
/// the order in which pending graphs and their moves are processed.
auto petersen_family_closure(unsigned order_seed) -> std::vector<FamilyMember>;

auto petersen_graph() -> Graph;
auto k44_minus_edge() -> Graph;

} // namespace linkless

#endif
