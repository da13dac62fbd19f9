#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twosc/error.hpp"

namespace twosc {

/// A set of vertices of a graph with at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

constexpr int popcount(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

/// Iterates the members of a VertexSet in increasing order.
class members {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(VertexSet rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    VertexSet rest_ = 0;
  };

  constexpr explicit members(VertexSet s) : set_(s) {}
  constexpr iterator begin() const { return iterator(set_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  VertexSet set_;
};

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

using Triangle = std::array<int, 3>;

/// Finite simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Adjacency is one bitset row per vertex. Values are immutable once built;
/// the edit functions below return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;
  VertexSet vertices() const { return first_n(order()); }

  bool adjacent(int u, int v) const { return contains(rows_[u], v); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return popcount(rows_[v]); }
  std::span<const VertexSet> rows() const { return rows_; }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> rows_;
};

/// Shortest-path metrics of a graph. Distances between vertices in different
/// components are `kInfiniteDistance`, which exceeds every finite distance on
/// up to kMaxVertices vertices.
inline constexpr int kInfiniteDistance = kMaxVertices + 1;

class DistanceProfile {
 public:
  explicit DistanceProfile(const Graph& g);

  int infinity() const { return kInfiniteDistance; }
  int distance(int u, int v) const { return distances_[u * n_ + v]; }
  int eccentricity(int v) const { return eccentricities_[v]; }
  int radius() const { return radius_; }
  int diameter() const { return diameter_; }
  bool connected() const { return diameter_ < kInfiniteDistance; }

 private:
  int n_;
  std::vector<int> distances_;
  std::vector<int> eccentricities_;
  int radius_;
  int diameter_;
};

inline DistanceProfile distance_profile(const Graph& g) { return DistanceProfile(g); }

Graph complement(const Graph& g);

/// Connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// True iff `component` induces K_{1,m} for some m >= 1.
bool is_star(const Graph& g, VertexSet component);

/// The center of a star component. For K_{1,1} the smaller vertex is returned.
std::optional<int> star_center(const Graph& g, VertexSet component);

/// All triangles as sorted triples, in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);
long count_triangles(const Graph& g);
bool is_triangle_free(const Graph& g);

bool is_independent(const Graph& g, VertexSet s);

/// Returns g with `remove` deleted and `add` inserted. Throws on a missing
/// removed edge, an already present added edge, or a loop.
Graph edit(const Graph& g, std::optional<Edge> remove, std::optional<Edge> add);
Graph without_edge(const Graph& g, Edge e);
Graph with_edge(const Graph& g, Edge e);

/// Subgraph induced on `keep`; vertex i of the result is the i-th smallest
/// member of `keep`.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Relabels vertex v as position[v].
Graph relabel(const Graph& g, std::span<const int> position);

/// Distance from v to the nearest member of s; infinity for empty s.
int distance_to_set(const DistanceProfile& profile, int v, VertexSet s);

}  // namespace twosc
