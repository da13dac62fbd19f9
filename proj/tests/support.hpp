#pragma once

// Fixtures and brute-force oracles. The oracles work on a plain adjacency
// matrix built from the edge list and share no code with the library.

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "twosc/graph.hpp"

namespace fixture {

using twosc::Edge;
using twosc::Graph;

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph complete_bipartite(int k, int l) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) e.emplace_back(i, k + j);
  return Graph(k + l, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

// K_{3,3} on {0,1,2} | {3,4,5}; the edge y–z = 0–3 is replaced by 0–6–3.
inline constexpr int kEx2X = 6;
inline constexpr int kEx2Y = 0;
inline constexpr int kEx2Z = 3;

inline Graph example2() {
  return Graph(7, {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {6, 0}, {6, 3}});
}

// Edge list exactly as printed, duplicate 23 included.
inline const std::vector<Edge>& example1_printed_edges() {
  static const std::vector<Edge> e{{0, 1}, {2, 3}, {1, 2}, {1, 4}, {1, 5}, {2, 3},
                                   {3, 6}, {3, 7}, {4, 6}, {5, 7}, {6, 7}};
  return e;
}

// The duplicate 23 replaced by 03.
inline Graph example1_corrected() {
  return Graph(8, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 6}, {3, 7}, {4, 6}, {5, 7}, {6, 7}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Every labeled graph on n vertices (n ≤ 6).
inline std::vector<Graph> all_labeled(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) e.emplace_back(slots[b].first, slots[b].second);
    out.emplace_back(n, e);
  }
  return out;
}

// Every graph on n vertices up to isomorphism, as multisets of connected
// components drawn from `connected[size]` (which must cover sizes 1..n).
inline std::vector<Graph> all_unlabeled(int n, const std::vector<std::vector<Graph>>& connected) {
  std::vector<Graph> out;
  std::vector<Edge> edges;
  // Components are appended in non-decreasing (size, index) order.
  auto extend = [&](auto&& self, int used, int min_size, std::size_t min_index) -> void {
    if (used == n) {
      out.emplace_back(n, edges);
      return;
    }
    for (int size = min_size; used + size <= n; ++size) {
      const auto& pool = connected[size];
      for (std::size_t i = size == min_size ? min_index : 0; i < pool.size(); ++i) {
        const std::size_t mark = edges.size();
        for (const Edge& e : pool[i].edges()) edges.emplace_back(e.u + used, e.v + used);
        self(self, used + size, size, i);
        edges.resize(mark);
      }
    }
  };
  extend(extend, 0, 1, 0);
  return out;
}

}  // namespace fixture

namespace oracle {

inline constexpr int kInf = 1 << 20;

struct Matrix {
  int n = 0;
  std::vector<std::vector<char>> a;
};

inline Matrix matrix(const twosc::Graph& g) {
  Matrix m{g.order(), std::vector<std::vector<char>>(g.order(), std::vector<char>(g.order(), 0))};
  for (const auto& e : g.edges()) m.a[e.u][e.v] = m.a[e.v][e.u] = 1;
  return m;
}

inline std::vector<std::vector<int>> floyd_warshall(const Matrix& m) {
  std::vector<std::vector<int>> d(m.n, std::vector<int>(m.n, kInf));
  for (int i = 0; i < m.n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < m.n; ++j)
      if (m.a[i][j]) d[i][j] = 1;
  }
  for (int k = 0; k < m.n; ++k)
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<int> eccentricities(const Matrix& m) {
  auto d = floyd_warshall(m);
  std::vector<int> ecc(m.n, 0);
  for (int i = 0; i < m.n; ++i) ecc[i] = *std::max_element(d[i].begin(), d[i].end());
  return ecc;
}

inline bool self_centered_two(const Matrix& m) {
  if (m.n == 0) return false;
  auto ecc = eccentricities(m);
  return std::all_of(ecc.begin(), ecc.end(), [](int e) { return e == 2; });
}

inline bool two_sc(const twosc::Graph& g) { return self_centered_two(matrix(g)); }

inline bool edge_minimal(const twosc::Graph& g) {
  Matrix m = matrix(g);
  if (!self_centered_two(m)) return false;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      if (!m.a[i][j]) continue;
      m.a[i][j] = m.a[j][i] = 0;
      const bool still = self_centered_two(m);
      m.a[i][j] = m.a[j][i] = 1;
      if (still) return false;
    }
  return true;
}

inline bool edge_maximal(const twosc::Graph& g) {
  Matrix m = matrix(g);
  if (!self_centered_two(m)) return false;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      if (m.a[i][j]) continue;
      m.a[i][j] = m.a[j][i] = 1;
      const bool still = self_centered_two(m);
      m.a[i][j] = m.a[j][i] = 0;
      if (still) return false;
    }
  return true;
}

inline long triangle_count(const twosc::Graph& g) {
  Matrix m = matrix(g);
  long c = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      for (int k = j + 1; k < m.n; ++k) c += m.a[i][j] && m.a[j][k] && m.a[i][k];
  return c;
}

// (critical, u, v) with u < v: non-adjacent u, v whose only common neighbor is critical.
inline std::vector<std::array<int, 3>> critical_triples(const twosc::Graph& g) {
  Matrix m = matrix(g);
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < m.n; ++u)
    for (int v = u + 1; v < m.n; ++v) {
      if (m.a[u][v]) continue;
      std::vector<int> common;
      for (int w = 0; w < m.n; ++w)
        if (m.a[u][w] && m.a[v][w]) common.push_back(w);
      if (common.size() == 1) out.push_back({common[0], u, v});
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool isomorphic(const twosc::Graph& a, const twosc::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  Matrix ma = matrix(a), mb = matrix(b);
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < ma.n && same; ++i)
      for (int j = 0; j < ma.n && same; ++j) same = ma.a[i][j] == mb.a[p[i]][p[j]];
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool connected(const twosc::Graph& g) {
  if (g.order() == 0) return true;
  auto d = floyd_warshall(matrix(g));
  return std::all_of(d[0].begin(), d[0].end(), [](int x) { return x < kInf; });
}

}  // namespace oracle
