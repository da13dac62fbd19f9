#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twosc/graph.hpp"

namespace twosc {

/// Two families of independent vertex sets of a core graph X. Sets may repeat.
struct SbicWitness {
  std::vector<VertexSet> a_family;
  std::vector<VertexSet> b_family;

  bool operator==(const SbicWitness&) const = default;
};

/// Conditions of a specialized bi-independent covering, in order:
///   kTriangleFree  X has no triangle
///   kCovers        each family is a cover of V(X) by non-empty independent sets
///   kFarPairs      pairs at distance >= 3 (or disconnected) share an A_i or a B_j
///   kAToB          d(u, A_i) >= 2  ->  some B_j disjoint from A_i contains u
///   kBToA          d(u, B_j) >= 2  ->  some A_i disjoint from B_j contains u
enum class SbicCondition { kTriangleFree = 0, kCovers, kFarPairs, kAToB, kBToA };

inline constexpr int kSbicConditions = 5;

struct SbicViolation {
  std::string detail;
  std::optional<int> vertex;
  std::optional<int> other_vertex;
  std::optional<int> set_index;  // index into the family named by the condition
};

struct SbicReport {
  std::array<bool, kSbicConditions> passed{};
  std::array<std::optional<SbicViolation>, kSbicConditions> first_violation;

  bool ok() const;
  bool holds(SbicCondition c) const { return passed[static_cast<int>(c)]; }
};

/// Evaluates every condition and records the first counterexample of each.
/// Empty families are accepted only for an empty X.
/// Throws Error(kSetOutOfRange) if a set names a vertex outside X.
SbicReport verify_sbic(const Graph& x, const SbicWitness& w);

/// Builds a witness for a triangle-free X: start both families from the
/// singletons, then repair each violation by appending a maximal independent
/// set (for far pairs, one containing the pair; for the cross conditions,
/// one containing u and avoiding the offending set).
/// Throws Error(kHasTriangle).
SbicWitness construct_sbic(const Graph& x);

/// Greedily extends `seed` to an independent set of g that is maximal among
/// those avoiding `forbidden`. Candidates are taken in increasing vertex order.
VertexSet extend_independent(const Graph& g, VertexSet seed, VertexSet forbidden = 0);

std::string_view to_string(SbicCondition c);

}  // namespace twosc
