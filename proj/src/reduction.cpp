#include "twosc/reduction.hpp"

#include <algorithm>
#include <set>

#include "twosc/recognition.hpp"

namespace twosc {
namespace {

void require_2sc(const Graph& g, const char* op) {
  if (!is_two_self_centered(g).is_2sc) {
    throw Error(ErrorCode::kNotTwoSelfCentered, std::string(op) + ": input is not 2-self-centered");
  }
}

bool has_critical_endpoint(const Graph& g, Edge e) {
  return critical_partners(g, e.u, e.v) || critical_partners(g, e.v, e.u);
}

std::array<Edge, 3> sides(const Triangle& t) { return {Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2])}; }

void explore(const Graph& g, long max_sequences, OrderExploration& out) {
  if (out.sequences >= max_sequences) {
    out.truncated = true;
    return;
  }
  if (is_triangle_free(g)) {
    ++out.sequences;
    if (is_two_self_centered(g).is_2sc) ++out.successful;
    return;
  }
  const std::vector<Edge> choices = qualifying_edges(g);
  if (choices.empty()) {
    ++out.sequences;
    return;
  }
  for (const Edge& e : choices) {
    auto [next, step] = apply_star_procedure(g, e.u, e.v);
    if (!is_sound(step)) {
      ++out.sequences;
      continue;
    }
    explore(next, max_sequences, out);
    if (out.truncated) return;
  }
}

}  // namespace

std::pair<Graph, ReductionStep> apply_star_procedure(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v) ||
      !(g.neighbors(u) & g.neighbors(v))) {
    throw Error(ErrorCode::kEdgeNotInTriangle,
                "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in a triangle");
  }
  ReductionStep step;
  step.removed = Edge(u, v);
  step.u = u;
  step.v = v;
  step.u_partners = critical_partners(g, u, v);
  step.v_partners = critical_partners(g, v, u);
  if (!step.u_partners && !step.v_partners) {
    throw Error(ErrorCode::kNoCriticalEndpoint, "neither " + std::to_string(u) + " nor " + std::to_string(v) +
                                                    " is critical for the other endpoint");
  }
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  rows[u] &= ~bit(v);
  rows[v] &= ~bit(u);
  auto join = [&](int a, int b) {
    rows[a] |= bit(b);
    rows[b] |= bit(a);
    step.added.emplace_back(a, b);
  };
  for (int w : members(step.u_partners)) join(v, w);
  for (int w : members(step.v_partners)) join(u, w);
  std::sort(step.added.begin(), step.added.end());
  Graph next = Graph::from_rows(std::move(rows));

  const auto before = triangles(g);
  const auto after = triangles(next);
  step.triangles_before = static_cast<long>(before.size());
  step.triangles_after = static_cast<long>(after.size());
  step.created_triangle = std::any_of(after.begin(), after.end(), [&](const Triangle& t) {
    return !std::binary_search(before.begin(), before.end(), t);
  });
  step.result_is_2sc = is_two_self_centered(next).is_2sc;
  return {std::move(next), std::move(step)};
}

bool is_sound(const ReductionStep& step) {
  return step.result_is_2sc && !step.created_triangle && step.triangles_after < step.triangles_before;
}

std::vector<Edge> qualifying_edges(const Graph& g) {
  std::vector<Edge> out;
  std::set<Edge> seen;
  for (const Triangle& t : triangles(g)) {
    for (const Edge& e : sides(t)) {
      if (!seen.insert(e).second) continue;
      if (has_critical_endpoint(g, e)) out.push_back(e);
    }
  }
  return out;
}

ReductionTrace reduce_to_triangle_free(const Graph& g) {
  require_2sc(g, "reduce_to_triangle_free");
  ReductionTrace trace;
  trace.final = g;
  const long budget = count_triangles(g);
  while (!is_triangle_free(trace.final)) {
    if (static_cast<long>(trace.steps.size()) >= budget) {
      trace.stop_reason = "step count reached the initial triangle count";
      return trace;
    }
    const std::vector<Edge> candidates = qualifying_edges(trace.final);
    if (candidates.empty()) {
      trace.stop_reason = "no triangle edge has a critical endpoint";
      return trace;
    }
    std::vector<Edge> skipped;
    bool applied = false;
    for (const Edge& e : candidates) {
      auto [next, step] = apply_star_procedure(trace.final, e.u, e.v);
      if (!is_sound(step)) {
        skipped.push_back(e);
        continue;
      }
      step.skipped = std::move(skipped);
      trace.steps.push_back(std::move(step));
      trace.final = std::move(next);
      applied = true;
      break;
    }
    if (!applied) {
      trace.stop_reason = "every qualifying step would create a triangle or leave the 2-self-centered class";
      return trace;
    }
  }
  trace.succeeded = true;
  return trace;
}

OrderExploration explore_reduction_orders(const Graph& g, long max_sequences) {
  require_2sc(g, "explore_reduction_orders");
  OrderExploration out;
  explore(g, max_sequences, out);
  return out;
}

TriangleClassification classify_edge_minimal_with_triangles(const Graph& g) {
  require_2sc(g, "classify_edge_minimal_with_triangles");
  const auto tri = triangles(g);
  if (tri.empty()) throw Error(ErrorCode::kTriangleFree, "classify_edge_minimal_with_triangles: input is triangle-free");
  TriangleClassification c;
  c.every_triangle_edge_has_critical_endpoint = true;
  for (const Triangle& t : tri) {
    for (const Edge& e : sides(t)) {
      if (!has_critical_endpoint(g, e)) {
        c.every_triangle_edge_has_critical_endpoint = false;
        c.uncovered_edge = e;
        break;
      }
    }
    if (!c.every_triangle_edge_has_critical_endpoint) break;
  }
  c.trace = reduce_to_triangle_free(g);
  c.edge_minimal = c.every_triangle_edge_has_critical_endpoint && c.trace.succeeded;
  return c;
}

}  // namespace twosc
