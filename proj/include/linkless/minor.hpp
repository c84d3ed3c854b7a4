#ifndef LINKLESS_MINOR_HPP
#define LINKLESS_MINOR_HPP

#include "linkless/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linkless {

/**
 * Witness that `pattern` is a minor of `host`: branch_sets[p] is the set of
 * host vertices contracted onto pattern vertex p. A valid model has
 * nonempty, pairwise disjoint, connected branch sets, and every pattern
 * edge is realised by some host edge between the corresponding sets.
 */
struct MinorModel {
    Graph pattern;
    Graph host;
    std::vector<VertexSet> branch_sets;
};

/// Complete search: a model if pattern is a minor of host, otherwise none.
/// Ties are broken by ascending vertex index so the model is reproducible.
auto find_minor(const Graph & host, const Graph & pattern) -> std::optional<MinorModel>;

/// Re-check the three model invariants from scratch.
auto validate_model(const MinorModel & m) -> bool;

/**
 * Realise a model as actual minor operations on the host: delete every
 * vertex outside the branch sets, then contract each branch set down to a
 * single vertex one edge at a time. Vertex p of the result is the image of
 * branch_sets[p]; the pattern is a spanning subgraph of the result, and
 * deleting the surplus edges yields the pattern itself. Throws
 * InvalidModel when validate_model fails.
 */
auto replay_model(const MinorModel & m) -> Graph;

/// Exhaustive oracle over every way of sending host vertices to a pattern
/// vertex or to "unused". Hosts of at most 8 vertices.
auto brute_force_has_minor(const Graph & host, const Graph & pattern) -> bool;

/// Certificate text: pattern graph6, host graph6, then one line per
/// branch set listing host vertex indices.
auto to_certificate(const MinorModel & m) -> std::string;
auto from_certificate(std::string_view text) -> MinorModel;

} // namespace linkless

#endif
