#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "twosc/graph.hpp"
#include "twosc/sbic.hpp"

namespace twosc {

/// Parameters of a generalized complete bipartite graph: parts K and L of
/// sizes k and l, the core X with its covering witness (families A_1..A_r and
/// B_1..B_s), from which connector vertices y_1..y_r and z_1..z_s are derived.
struct GcbSpec {
  int k = 0;
  int l = 0;
  Graph core;
  SbicWitness witness;

  int r() const { return static_cast<int>(witness.a_family.size()); }
  int s() const { return static_cast<int>(witness.b_family.size()); }
  int t() const { return core.order(); }
  int order() const { return k + l + r() + s() + t(); }

  bool operator==(const GcbSpec&) const = default;
};

/// How the l = 0 special case is read. kPrinted repeats the pairwise
/// A-family condition of the k = 0 case word for word; kSymmetric uses the
/// mirrored B-family condition instead.
enum class Item8Reading { kPrinted, kSymmetric };

inline constexpr int kGcbItems = 11;

struct GcbItemVerdict {
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

/// items[i] is the verdict for construction rule i + 1. Rules 1-6 are the
/// assembly rules and only fail on malformed sizes or sets; 7-11 are the
/// special cases. `sbic` is the covering check of the core.
struct GcbValidation {
  std::array<GcbItemVerdict, kGcbItems> items;
  bool sbic_checked = false;
  SbicReport sbic;

  bool ok() const;
};

GcbValidation validate_gcb_spec(const GcbSpec& spec, Item8Reading reading = Item8Reading::kPrinted);

/// Vertex layout of the assembled graph: K, then L, Y, Z and finally X.
struct GcbLayout {
  int k_begin, l_begin, y_begin, z_begin, x_begin, order;

  explicit GcbLayout(const GcbSpec& spec)
      : k_begin(0),
        l_begin(spec.k),
        y_begin(spec.k + spec.l),
        z_begin(y_begin + spec.r()),
        x_begin(z_begin + spec.s()),
        order(x_begin + spec.t()) {}
};

/// Assembles the graph after validating; throws Error(kInvalidSpec) when
/// validation fails.
Graph build_gcb(const GcbSpec& spec, Item8Reading reading = Item8Reading::kPrinted);

/// Applies the assembly rules without validating the special cases. Sets
/// must still lie inside V(X) and the order must fit in 64 vertices.
Graph assemble_gcb(const GcbSpec& spec);

/// k*l + k*r + l*s + |E(X)| + sum |A_i| + sum |B_j| + #{(i, j) : A_i, B_j disjoint}.
long gcb_edge_count(const GcbSpec& spec);

enum class GcbRole { kK, kL, kY, kZ, kX };

std::string_view to_string(GcbRole role);

struct VertexRole {
  GcbRole role = GcbRole::kX;
  int index = 0;  // position within its part
};

/// A decomposition of an input graph: position[v] is the label of input
/// vertex v in assemble_gcb(spec).
struct GcbDecomposition {
  GcbSpec spec;
  std::vector<int> position;
  std::vector<VertexRole> roles;
};

/// Peels a triangle-free 2-self-centered graph: Y' maximal independent, Z'
/// maximal independent in the rest, X the remainder; K and L are the members
/// of Z' and Y' without neighbors in X; A_i and B_j are the X-neighborhoods
/// of the remaining connectors. Maximal sets are grown greedily in order of
/// descending degree, ties by vertex id. If that spec fails validation under
/// `reading`, each vertex in turn is forced into Y' (and then into Z') until a
/// valid spec appears; the default spec is returned if none does.
/// Throws Error(kNotTwoSelfCentered) or Error(kHasTriangle).
GcbDecomposition decompose_triangle_free(const Graph& g, Item8Reading reading = Item8Reading::kPrinted);

/// Random valid spec with at most `budget` vertices, deterministic per seed.
/// Throws Error(kBudgetTooSmall) for budget < 4 and Error(kRetryLimitExhausted)
/// if no valid spec is found.
GcbSpec sample_gcb_spec(int budget, std::uint64_t seed, Item8Reading reading = Item8Reading::kPrinted);

}  // namespace twosc
