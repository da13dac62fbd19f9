#include "twosc/recognition.hpp"

#include <cassert>

namespace twosc {
namespace {

bool passes(const Graph& g) { return is_two_self_centered(g).is_2sc; }

void require_2sc(const Graph& g, const char* op) {
  if (!passes(g)) {
    throw Error(ErrorCode::kNotTwoSelfCentered, std::string(op) + ": input is not 2-self-centered");
  }
}

}  // namespace

TwoScVerdict is_two_self_centered(const Graph& g) {
  TwoScVerdict verdict;
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < 2 || d > n - 2) {
      verdict.violating_vertex = v;
      break;
    }
  }
  for (int u = 0; u < n && !verdict.violating_pair; ++u) {
    const VertexSet later_non_neighbors = g.vertices() & ~g.neighbors(u) & ~first_n(u + 1);
    for (int v : members(later_non_neighbors)) {
      if (!(g.neighbors(u) & g.neighbors(v))) {
        verdict.violating_pair = Edge(u, v);
        break;
      }
    }
  }
  verdict.is_2sc = n > 0 && !verdict.violating_vertex && !verdict.violating_pair;
  assert(verdict.is_2sc == radius_and_diameter_are_two(g));
  return verdict;
}

bool radius_and_diameter_are_two(const Graph& g) {
  if (g.order() == 0) return false;
  const DistanceProfile profile(g);
  return profile.radius() == 2 && profile.diameter() == 2;
}

EdgeMaximalCertificate is_edge_maximal(const Graph& g) {
  require_2sc(g, "is_edge_maximal");
  const Graph co = complement(g);
  EdgeMaximalCertificate cert;
  bool all_stars = true;
  for (VertexSet part : connected_components(co)) {
    ComplementComponent c{part, star_center(co, part)};
    all_stars = all_stars && c.star_center.has_value();
    cert.components.push_back(c);
  }
  cert.complement_disconnected = cert.components.size() > 1;
  cert.is_edge_maximal = cert.complement_disconnected && all_stars;
  assert(cert.is_edge_maximal == is_edge_maximal_by_definition(g));
  return cert;
}

bool is_edge_maximal_by_definition(const Graph& g) {
  require_2sc(g, "is_edge_maximal_by_definition");
  for (const Edge& e : complement(g).edges()) {
    if (passes(with_edge(g, e))) return false;
  }
  return true;
}

EdgeMinimalCertificate is_edge_minimal(const Graph& g) {
  require_2sc(g, "is_edge_minimal");
  for (const Edge& e : g.edges()) {
    if (passes(without_edge(g, e))) return {false, e};
  }
  return {true, std::nullopt};
}

std::vector<CriticalTriple> critical_triples(const Graph& g) {
  require_2sc(g, "critical_triples");
  std::vector<CriticalTriple> out;
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet later_non_neighbors = g.vertices() & ~g.neighbors(u) & ~first_n(u + 1);
    for (int v : members(later_non_neighbors)) {
      const VertexSet common = g.neighbors(u) & g.neighbors(v);
      if (popcount(common) == 1) out.push_back({std::countr_zero(common), u, v});
    }
  }
  return out;
}

VertexSet critical_partners(const Graph& g, int x, int a) {
  VertexSet partners = 0;
  for (int w : members(g.neighbors(x) & ~g.neighbors(a) & ~bit(a))) {
    if ((g.neighbors(w) & g.neighbors(a)) == bit(x)) partners |= bit(w);
  }
  return partners;
}

std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_parts(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  const VertexSet left = g.vertices() & ~g.neighbors(0);
  const VertexSet right = g.neighbors(0);
  if (!right) return std::nullopt;
  for (int v : members(left)) {
    if (g.neighbors(v) != right) return std::nullopt;
  }
  for (int v : members(right)) {
    if (g.neighbors(v) != left) return std::nullopt;
  }
  return std::pair{left, right};
}

bool check_bipartite_proposition(const Graph& g) {
  bool lhs = false;
  if (passes(g)) lhs = is_edge_minimal(g).is_edge_minimal && !is_connected(complement(g));
  const auto parts = complete_bipartite_parts(g);
  const bool rhs = parts && popcount(parts->first) >= 2 && popcount(parts->second) >= 2;
  return lhs == rhs;
}

bool check_triangle_free_lemma(const Graph& g) {
  require_2sc(g, "check_triangle_free_lemma");
  return !is_triangle_free(g) || is_edge_minimal(g).is_edge_minimal;
}

bool check_triangle_free_lemma_converse(const Graph& g) {
  require_2sc(g, "check_triangle_free_lemma_converse");
  if (!is_edge_minimal(g).is_edge_minimal || !critical_triples(g).empty()) return true;
  return is_triangle_free(g);
}

Sandwich find_sandwich(const Graph& g) {
  require_2sc(g, "find_sandwich");
  Graph low = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : low.edges()) {
      Graph candidate = without_edge(low, e);
      if (passes(candidate)) {
        low = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  Graph high = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : complement(high).edges()) {
      Graph candidate = with_edge(high, e);
      if (passes(candidate)) {
        high = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  return {std::move(low), std::move(high)};
}

bool is_spanning_subgraph(const Graph& sub, const Graph& super) {
  if (sub.order() != super.order()) return false;
  for (int v = 0; v < sub.order(); ++v) {
    if (sub.neighbors(v) & ~super.neighbors(v)) return false;
  }
  return true;
}

}  // namespace twosc
