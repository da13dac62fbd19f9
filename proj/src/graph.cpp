#include "twosc/graph.hpp"

#include <algorithm>
#include <limits>

namespace twosc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "invalid-graph";
    case ErrorCode::kVertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::kEdgeNotPresent: return "edge-not-present";
    case ErrorCode::kEdgeAlreadyPresent: return "edge-already-present";
    case ErrorCode::kLoop: return "loop";
    case ErrorCode::kTooManyVertices: return "too-many-vertices";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kNotTwoSelfCentered: return "input-not-2sc";
    case ErrorCode::kHasTriangle: return "input-has-triangle";
    case ErrorCode::kTriangleFree: return "input-triangle-free";
    case ErrorCode::kSetOutOfRange: return "set-out-of-range";
    case ErrorCode::kInvalidSpec: return "invalid-spec";
    case ErrorCode::kEdgeNotInTriangle: return "edge-not-in-triangle";
    case ErrorCode::kNoCriticalEndpoint: return "no-critical-endpoint";
    case ErrorCode::kBudgetTooSmall: return "budget-too-small";
    case ErrorCode::kRetryLimitExhausted: return "retry-limit-exhausted";
    case ErrorCode::kOutOfRange: return "n-out-of-range";
  }
  return "unknown";
}

std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for (int v : members(s)) out.push_back(v);
  return out;
}

VertexSet to_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) {
      throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
    s |= bit(v);
  }
  return s;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                "graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
  rows_.assign(n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw Error(ErrorCode::kLoop, "loop at vertex " + std::to_string(e.u));
    rows_[e.u] |= bit(e.v);
    rows_[e.v] |= bit(e.u);
  }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    if (rows[v] & ~all) throw Error(ErrorCode::kInvalidGraph, "adjacency row references missing vertex");
    if (contains(rows[v], v)) throw Error(ErrorCode::kLoop, "loop at vertex " + std::to_string(v));
    for (int w : members(rows[v])) {
      if (!contains(rows[w], v)) throw Error(ErrorCode::kInvalidGraph, "adjacency is not symmetric");
    }
  }
  g.rows_ = std::move(rows);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(order() - 1));
  }
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet r : rows_) twice += popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : members(rows_[u] & ~first_n(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

DistanceProfile::DistanceProfile(const Graph& g)
    : n_(g.order()),
      distances_(static_cast<std::size_t>(n_) * n_, kInfiniteDistance),
      eccentricities_(n_, 0),
      radius_(kInfiniteDistance),
      diameter_(0) {
  for (int s = 0; s < n_; ++s) {
    VertexSet seen = bit(s);
    VertexSet frontier = bit(s);
    int depth = 0;
    while (frontier) {
      for (int v : members(frontier)) distances_[s * n_ + v] = depth;
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      next &= ~seen;
      seen |= next;
      frontier = next;
      ++depth;
    }
    eccentricities_[s] = seen == g.vertices() ? depth - 1 : kInfiniteDistance;
  }
  if (n_ == 0) {
    radius_ = diameter_ = kInfiniteDistance;
    return;
  }
  radius_ = *std::min_element(eccentricities_.begin(), eccentricities_.end());
  diameter_ = *std::max_element(eccentricities_.begin(), eccentricities_.end());
}

Graph complement(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = all & ~g.neighbors(v) & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> parts;
  VertexSet unvisited = g.vertices();
  while (unvisited) {
    VertexSet part = unvisited & -unvisited;
    VertexSet frontier = part;
    while (frontier) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      frontier = next & ~part;
      part |= next;
    }
    parts.push_back(part);
    unvisited &= ~part;
  }
  return parts;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<int> star_center(const Graph& g, VertexSet component) {
  const int size = popcount(component);
  if (size < 2) return std::nullopt;
  for (int c : members(component)) {
    const VertexSet leaves = component & ~bit(c);
    if ((g.neighbors(c) & component) != leaves) continue;
    bool independent = true;
    for (int leaf : members(leaves)) {
      if (g.neighbors(leaf) & leaves) {
        independent = false;
        break;
      }
    }
    if (independent) return c;
  }
  return std::nullopt;
}

bool is_star(const Graph& g, VertexSet component) { return star_center(g, component).has_value(); }

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int a = 0; a < g.order(); ++a) {
    const VertexSet later = g.neighbors(a) & ~first_n(a + 1);
    for (int b : members(later)) {
      for (int c : members(later & g.neighbors(b) & ~first_n(b + 1))) out.push_back({a, b, c});
    }
  }
  return out;
}

long count_triangles(const Graph& g) {
  long count = 0;
  for (int a = 0; a < g.order(); ++a) {
    const VertexSet later = g.neighbors(a) & ~first_n(a + 1);
    for (int b : members(later)) count += popcount(later & g.neighbors(b) & ~first_n(b + 1));
  }
  return count;
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : members(g.neighbors(u) & ~first_n(u + 1))) {
      if (g.neighbors(u) & g.neighbors(v)) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw Error(ErrorCode::kSetOutOfRange, "vertex set exceeds graph order");
  for (int v : members(s)) {
    if (g.neighbors(v) & s) return false;
  }
  return true;
}

Graph edit(const Graph& g, std::optional<Edge> remove, std::optional<Edge> add) {
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  auto check = [&](const Edge& e) {
    if (e.u < 0 || e.v >= g.order()) {
      throw Error(ErrorCode::kVertexOutOfRange, "edge endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::kLoop, "loop at vertex " + std::to_string(e.u));
  };
  if (remove) {
    check(*remove);
    if (!g.adjacent(remove->u, remove->v)) {
      throw Error(ErrorCode::kEdgeNotPresent, "edge " + std::to_string(remove->u) + "-" +
                                                  std::to_string(remove->v) + " not present");
    }
    rows[remove->u] &= ~bit(remove->v);
    rows[remove->v] &= ~bit(remove->u);
  }
  if (add) {
    check(*add);
    if (contains(rows[add->u], add->v)) {
      throw Error(ErrorCode::kEdgeAlreadyPresent, "edge " + std::to_string(add->u) + "-" +
                                                      std::to_string(add->v) + " already present");
    }
    rows[add->u] |= bit(add->v);
    rows[add->v] |= bit(add->u);
  }
  return Graph::from_rows(std::move(rows));
}

Graph without_edge(const Graph& g, Edge e) { return edit(g, e, std::nullopt); }

Graph with_edge(const Graph& g, Edge e) { return edit(g, std::nullopt, e); }

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (keep & ~g.vertices()) throw Error(ErrorCode::kSetOutOfRange, "vertex set exceeds graph order");
  const std::vector<int> kept = to_vector(keep);
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<int>(i);
  std::vector<VertexSet> rows(kept.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (int w : members(g.neighbors(kept[i]) & keep)) rows[i] |= bit(index[w]);
  }
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> position) {
  if (static_cast<int>(position.size()) != g.order()) {
    throw Error(ErrorCode::kInvalidGraph, "relabeling has wrong length");
  }
  VertexSet image = 0;
  for (int p : position) {
    if (p < 0 || p >= g.order() || contains(image, p)) {
      throw Error(ErrorCode::kInvalidGraph, "relabeling is not a permutation");
    }
    image |= bit(p);
  }
  std::vector<VertexSet> rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    for (int w : members(g.neighbors(v))) rows[position[v]] |= bit(position[w]);
  }
  return Graph::from_rows(std::move(rows));
}

int distance_to_set(const DistanceProfile& profile, int v, VertexSet s) {
  int best = profile.infinity();
  for (int w : members(s)) best = std::min(best, profile.distance(v, w));
  return best;
}

}  // namespace twosc
