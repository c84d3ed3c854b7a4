#ifndef LINKLESS_ISO_HPP
#define LINKLESS_ISO_HPP

#include "linkless/graph.hpp"

#include <string>
#include <vector>

namespace linkless {

inline constexpr int max_canonical_vertices = 13;

struct CanonicalForm {
    /// graph6 of the relabeled graph; equal strings iff isomorphic inputs.
    std::string graph6;
    /// perm[v] is the canonical index of input vertex v.
    std::vector<int> perm;
};

/// Canonical labeling by equitable refinement plus individualization, with
/// automorphism pruning. The canonical string is the smallest graph6 over
/// all leaves of the search tree. Throws CapacityExceeded above 13 vertices.
auto canonical_form(const Graph & g) -> CanonicalForm;

auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

} // namespace linkless

#endif
