#pragma once

#include <string>
#include <vector>

#include "twosc/graph.hpp"

namespace twosc {

/// Canonical relabeling: position[v] is the new label of v. Two graphs are
/// isomorphic iff their canonical forms are equal.
///
/// Equitable partition refinement, then individualization over the first
/// non-singleton cell, keeping the lexicographically largest relabeled
/// adjacency matrix. Interchangeable twins in a cell are branched on once.
/// Intended for small graphs; cost grows with the automorphism structure.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// graph6 string of the canonical form.
std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace twosc
