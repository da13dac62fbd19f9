#pragma once

#include <optional>
#include <vector>

#include "twosc/graph.hpp"

namespace twosc {

/// Outcome of the degree/common-neighbor test for radius = diameter = 2.
/// `is_2sc` holds exactly when the graph is non-empty and neither witness is
/// present.
struct TwoScVerdict {
  bool is_2sc = false;
  std::optional<int> violating_vertex;  // degree < 2 or > n - 2
  std::optional<Edge> violating_pair;   // non-adjacent, no common neighbor
};

/// Decides 2-self-centeredness from degrees and common neighbors:
///   (i)  2 <= deg(v) <= n - 2 for every v, and
///   (ii) every non-adjacent pair has a common neighbor.
/// The first failing vertex (lowest id) and pair (lexicographic) are reported.
TwoScVerdict is_two_self_centered(const Graph& g);

/// The same property computed from BFS eccentricities.
bool radius_and_diameter_are_two(const Graph& g);

struct ComplementComponent {
  VertexSet vertices = 0;
  std::optional<int> star_center;  // set iff the component is a star
};

struct EdgeMaximalCertificate {
  bool is_edge_maximal = false;
  bool complement_disconnected = false;
  std::vector<ComplementComponent> components;
};

/// Edge-maximality via the complement: a 2-self-centered graph is
/// edge-maximal iff its complement is disconnected and every complement
/// component is a star on at least two vertices.
/// Throws Error(kNotTwoSelfCentered) if g is not 2-self-centered.
EdgeMaximalCertificate is_edge_maximal(const Graph& g);

/// Tries every absent edge. Throws like is_edge_maximal.
bool is_edge_maximal_by_definition(const Graph& g);

struct EdgeMinimalCertificate {
  bool is_edge_minimal = false;
  std::optional<Edge> removable_edge;  // first edge whose removal keeps the property
};

/// Tries every present edge. Throws Error(kNotTwoSelfCentered).
EdgeMinimalCertificate is_edge_minimal(const Graph& g);

/// x is the only common neighbor of the non-adjacent pair {u, v}; u < v.
struct CriticalTriple {
  int critical = 0;
  int u = 0;
  int v = 0;

  auto operator<=>(const CriticalTriple&) const = default;
};

/// Every critical triple, ordered by (u, v). Throws Error(kNotTwoSelfCentered).
std::vector<CriticalTriple> critical_triples(const Graph& g);

/// Vertices w != a adjacent to x, not adjacent to a, whose only common
/// neighbor with a is x. Non-empty iff x is critical for a and some vertex.
VertexSet critical_partners(const Graph& g, int x, int a);

/// Parts of g if it is complete bipartite K_{k,l} with k, l >= 1.
std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_parts(const Graph& g);

/// [edge-minimal 2-self-centered with disconnected complement] iff
/// [K_{k,l} with k, l >= 2]. Defined for every graph.
bool check_bipartite_proposition(const Graph& g);

/// triangle-free implies edge-minimal. Throws Error(kNotTwoSelfCentered).
bool check_triangle_free_lemma(const Graph& g);

/// edge-minimal with no critical triple implies triangle-free.
/// Throws Error(kNotTwoSelfCentered).
bool check_triangle_free_lemma_converse(const Graph& g);

struct Sandwich {
  Graph minimal;  // edge-minimal 2-self-centered spanning subgraph
  Graph maximal;  // edge-maximal 2-self-centered spanning supergraph
};

/// Greedy search: delete (resp. add) the lexicographically first edge that
/// keeps the graph 2-self-centered, restarting after each change.
/// Throws Error(kNotTwoSelfCentered).
Sandwich find_sandwich(const Graph& g);

/// True iff `sub` is a spanning subgraph of `super`.
bool is_spanning_subgraph(const Graph& sub, const Graph& super);

}  // namespace twosc
