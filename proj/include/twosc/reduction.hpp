#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twosc/graph.hpp"

namespace twosc {

/// One application of the star procedure on edge {u, v}.
///
/// `u_partners` are the vertices w for which u is the only common neighbor of
/// v and w; `v_partners` likewise for v and u. The step removes {u, v}, joins
/// v to every u-partner and u to every v-partner.
struct ReductionStep {
  Edge removed;
  int u = 0;
  int v = 0;
  VertexSet u_partners = 0;
  VertexSet v_partners = 0;
  std::vector<Edge> added;
  long triangles_before = 0;
  long triangles_after = 0;
  bool result_is_2sc = false;
  bool created_triangle = false;
  /// Earlier candidates in selection order that were passed over because
  /// applying them would break an invariant (only set by the iteration).
  std::vector<Edge> skipped;
};

/// A step keeps the graph 2-self-centered, creates no triangle and lowers
/// the triangle count.
bool is_sound(const ReductionStep& step);

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Graph final;
  bool succeeded = false;
  std::string stop_reason;  // empty on success
};

/// Applies the star procedure on edge {u, v}. Requires the edge to lie in a
/// triangle and at least one endpoint to be critical for the other endpoint
/// and some vertex. The step records whether the result stayed
/// 2-self-centered and how the triangle count changed.
/// Throws Error(kEdgeNotInTriangle) or Error(kNoCriticalEndpoint).
std::pair<Graph, ReductionStep> apply_star_procedure(const Graph& g, int u, int v);

/// Triangle edges with a critical endpoint in selection order: triangles
/// lexicographically, then each triangle's edges lexicographically; an edge
/// shared by two triangles appears once, at its first position.
std::vector<Edge> qualifying_edges(const Graph& g);

/// Iterates the star procedure until no triangle remains. Each round applies
/// the first qualifying edge, in selection order, whose step is sound; a
/// qualifying edge can have two mutually adjacent partners, and joining the
/// other endpoint to both of them creates a triangle, so such candidates are
/// skipped. Stops unsuccessfully if no triangle edge has a critical endpoint,
/// no candidate step is sound, or the step count would exceed the initial
/// number of triangles.
/// Throws Error(kNotTwoSelfCentered).
ReductionTrace reduce_to_triangle_free(const Graph& g);

/// Outcome of exploring every sequence of qualifying-edge choices.
struct OrderExploration {
  long sequences = 0;
  long successful = 0;
  bool truncated = false;
};

/// Explores all reduction orders (every qualifying edge of every triangle at
/// each step), up to `max_sequences` leaves.
/// Throws Error(kNotTwoSelfCentered).
OrderExploration explore_reduction_orders(const Graph& g, long max_sequences = 100000);

struct TriangleClassification {
  bool edge_minimal = false;  // conditions (i) and (ii) together
  bool every_triangle_edge_has_critical_endpoint = false;
  std::optional<Edge> uncovered_edge;  // first triangle edge with no critical endpoint
  ReductionTrace trace;
};

/// Classifies a 2-self-centered graph with at least one triangle:
///   (i)  every edge of every triangle has an endpoint that is critical for
///        the other endpoint and some vertex, and
///   (ii) the reduction reaches a triangle-free 2-self-centered graph.
/// Throws Error(kNotTwoSelfCentered) or Error(kTriangleFree).
TriangleClassification classify_edge_minimal_with_triangles(const Graph& g);

}  // namespace twosc
