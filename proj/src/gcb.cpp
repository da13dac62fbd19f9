#include "twosc/gcb.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "twosc/recognition.hpp"

namespace twosc {
namespace {

std::string set_name(char family, std::size_t i) { return std::string(1, family) + std::to_string(i + 1); }

// For all i, j: F_i and F_j intersect, or some G_p is disjoint from both.
std::optional<std::string> pairwise_condition(const std::vector<VertexSet>& f, const std::vector<VertexSet>& g,
                                              char f_name, char g_name) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i; j < f.size(); ++j) {
      if (f[i] & f[j]) continue;
      const bool separated =
          std::any_of(g.begin(), g.end(), [&](VertexSet p) { return !(p & f[i]) && !(p & f[j]); });
      if (!separated) {
        return set_name(f_name, i) + " and " + set_name(f_name, j) + " are disjoint and no " +
               std::string(1, g_name) + "-set avoids both";
      }
    }
  }
  return std::nullopt;
}

// Every F_i is disjoint from some G_p, i.e. every connector of F has a
// neighbor among the connectors of G.
std::optional<std::string> has_disjoint_partner(const std::vector<VertexSet>& f,
                                                const std::vector<VertexSet>& g, char f_name,
                                                char g_name) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::none_of(g.begin(), g.end(), [&](VertexSet p) { return !(p & f[i]); })) {
      return set_name(f_name, i) + " meets every " + std::string(1, g_name) + "-set";
    }
  }
  return std::nullopt;
}

void require(GcbItemVerdict& item, std::optional<std::string> failure) {
  if (failure && item.passed) {
    item.passed = false;
    item.detail = *failure;
  }
}

bool sets_in_range(const std::vector<VertexSet>& family, VertexSet all) {
  return std::all_of(family.begin(), family.end(), [&](VertexSet s) { return !(s & ~all); });
}

}  // namespace

bool GcbValidation::ok() const {
  for (const auto& item : items) {
    if (item.applicable && !item.passed) return false;
  }
  return sbic_checked && sbic.ok();
}

GcbValidation validate_gcb_spec(const GcbSpec& spec, Item8Reading reading) {
  GcbValidation v;
  auto& item = v.items;
  const auto& a = spec.witness.a_family;
  const auto& b = spec.witness.b_family;
  const int r = spec.r();
  const int s = spec.s();
  const int t = spec.t();

  if (spec.k < 0 || spec.l < 0) require(item[0], "part sizes must be non-negative");
  if (spec.k >= 0 && spec.l >= 0 && spec.order() > kMaxVertices) {
    require(item[0], "total order " + std::to_string(spec.order()) + " exceeds " + std::to_string(kMaxVertices));
  }
  const bool a_ok = sets_in_range(a, spec.core.vertices());
  const bool b_ok = sets_in_range(b, spec.core.vertices());
  if (!a_ok) require(item[3], "an A-set names a vertex outside X");
  if (!b_ok) require(item[4], "a B-set names a vertex outside X");

  if (a_ok && b_ok) {
    v.sbic = verify_sbic(spec.core, spec.witness);
    v.sbic_checked = true;
  }

  item[6].applicable = spec.k == 0;
  if (item[6].applicable) {
    require(item[6], has_disjoint_partner(a, b, 'A', 'B'));
    require(item[6], pairwise_condition(a, b, 'A', 'B'));
  }

  item[7].applicable = spec.l == 0;
  if (item[7].applicable) {
    require(item[7], has_disjoint_partner(b, a, 'B', 'A'));
    if (reading == Item8Reading::kPrinted) {
      require(item[7], pairwise_condition(a, b, 'A', 'B'));
    } else {
      require(item[7], pairwise_condition(b, a, 'B', 'A'));
    }
  }

  if (r == 0 && spec.k == 0) require(item[8], "r = 0 requires k != 0");
  if (s == 0 && spec.l == 0) require(item[8], "s = 0 requires l != 0");

  const bool no_connectors = r == 0 && s == 0;
  const bool plain_bipartite = t == 0 && spec.k >= 2 && spec.l >= 2;
  if (no_connectors != plain_bipartite) {
    require(item[9], no_connectors ? "r = s = 0 requires empty X and k, l >= 2"
                                   : "empty X with k, l >= 2 requires r = s = 0");
  }

  item[10].applicable = t == 1;
  if (t == 1 && spec.k == 0 && spec.l == 0) require(item[10], "|X| = 1 requires k or l non-zero");
  return v;
}

Graph assemble_gcb(const GcbSpec& spec) {
  if (spec.k < 0 || spec.l < 0 || spec.order() > kMaxVertices) {
    throw Error(ErrorCode::kInvalidSpec, "part sizes out of range");
  }
  const VertexSet core = spec.core.vertices();
  if (!sets_in_range(spec.witness.a_family, core) || !sets_in_range(spec.witness.b_family, core)) {
    throw Error(ErrorCode::kSetOutOfRange, "witness set names a vertex outside X");
  }
  const GcbLayout at(spec);
  std::vector<Edge> edges;
  for (int a = 0; a < spec.k; ++a) {
    for (int b = 0; b < spec.l; ++b) edges.emplace_back(at.k_begin + a, at.l_begin + b);
    for (int i = 0; i < spec.r(); ++i) edges.emplace_back(at.k_begin + a, at.y_begin + i);
  }
  for (int b = 0; b < spec.l; ++b) {
    for (int j = 0; j < spec.s(); ++j) edges.emplace_back(at.l_begin + b, at.z_begin + j);
  }
  for (int i = 0; i < spec.r(); ++i) {
    for (int x : members(spec.witness.a_family[i])) edges.emplace_back(at.y_begin + i, at.x_begin + x);
  }
  for (int j = 0; j < spec.s(); ++j) {
    for (int x : members(spec.witness.b_family[j])) edges.emplace_back(at.z_begin + j, at.x_begin + x);
  }
  for (int i = 0; i < spec.r(); ++i) {
    for (int j = 0; j < spec.s(); ++j) {
      if (!(spec.witness.a_family[i] & spec.witness.b_family[j])) {
        edges.emplace_back(at.y_begin + i, at.z_begin + j);
      }
    }
  }
  for (const Edge& e : spec.core.edges()) edges.emplace_back(at.x_begin + e.u, at.x_begin + e.v);
  return Graph(at.order, edges);
}

Graph build_gcb(const GcbSpec& spec, Item8Reading reading) {
  const GcbValidation validation = validate_gcb_spec(spec, reading);
  if (!validation.ok()) {
    std::string why = "GCB spec fails validation";
    for (int i = 0; i < kGcbItems; ++i) {
      const auto& item = validation.items[i];
      if (item.applicable && !item.passed) why += "; item " + std::to_string(i + 1) + ": " + item.detail;
    }
    if (validation.sbic_checked && !validation.sbic.ok()) why += "; core covering invalid";
    throw Error(ErrorCode::kInvalidSpec, why);
  }
  Graph g = assemble_gcb(spec);
  assert(reading == Item8Reading::kPrinted || (is_triangle_free(g) && is_two_self_centered(g).is_2sc));
  return g;
}

long gcb_edge_count(const GcbSpec& spec) {
  const auto& a = spec.witness.a_family;
  const auto& b = spec.witness.b_family;
  long count = static_cast<long>(spec.k) * spec.l + static_cast<long>(spec.k) * spec.r() +
               static_cast<long>(spec.l) * spec.s() + spec.core.size();
  for (VertexSet set : a) count += popcount(set);
  for (VertexSet set : b) count += popcount(set);
  for (VertexSet x : a) {
    for (VertexSet y : b) count += (x & y) ? 0 : 1;
  }
  return count;
}

std::string_view to_string(GcbRole role) {
  switch (role) {
    case GcbRole::kK: return "K";
    case GcbRole::kL: return "L";
    case GcbRole::kY: return "Y";
    case GcbRole::kZ: return "Z";
    case GcbRole::kX: return "X";
  }
  return "?";
}

namespace {

// Greedy maximal independent set inside `available`, seeded with `first`
// when it is a valid vertex, then in descending degree order.
VertexSet greedy_independent(const Graph& g, const std::vector<int>& order, VertexSet available, int first) {
  VertexSet chosen = first >= 0 && contains(available, first) ? bit(first) : 0;
  for (int v : order) {
    if (contains(available, v) && !(g.neighbors(v) & chosen)) chosen |= bit(v);
  }
  return chosen;
}

GcbDecomposition peel(const Graph& g, const std::vector<int>& order, int y_first, int z_first) {
  const VertexSet y_prime = greedy_independent(g, order, g.vertices(), y_first);
  const VertexSet z_prime = greedy_independent(g, order, g.vertices() & ~y_prime, z_first);
  const VertexSet x_set = g.vertices() & ~y_prime & ~z_prime;

  VertexSet k_set = 0;
  VertexSet l_set = 0;
  for (int v : members(z_prime)) {
    if (!(g.neighbors(v) & x_set)) k_set |= bit(v);
  }
  for (int v : members(y_prime)) {
    if (!(g.neighbors(v) & x_set)) l_set |= bit(v);
  }
  const VertexSet y_set = y_prime & ~l_set;
  const VertexSet z_set = z_prime & ~k_set;

  GcbDecomposition d;
  d.spec.k = popcount(k_set);
  d.spec.l = popcount(l_set);
  d.spec.core = induced_subgraph(g, x_set);
  auto core_index = [&](VertexSet s) {
    VertexSet out = 0;
    for (int v : members(s)) out |= bit(popcount(x_set & first_n(v)));
    return out;
  };
  for (int y : members(y_set)) d.spec.witness.a_family.push_back(core_index(g.neighbors(y) & x_set));
  for (int z : members(z_set)) d.spec.witness.b_family.push_back(core_index(g.neighbors(z) & x_set));

  d.position.assign(g.order(), -1);
  d.roles.assign(g.order(), {});
  int next = 0;
  for (auto [role, part] : {std::pair{GcbRole::kK, k_set}, std::pair{GcbRole::kL, l_set},
                            std::pair{GcbRole::kY, y_set}, std::pair{GcbRole::kZ, z_set},
                            std::pair{GcbRole::kX, x_set}}) {
    int index = 0;
    for (int v : members(part)) {
      d.position[v] = next++;
      d.roles[v] = {role, index++};
    }
  }
  return d;
}

}  // namespace

GcbDecomposition decompose_triangle_free(const Graph& g, Item8Reading reading) {
  if (!is_two_self_centered(g).is_2sc) {
    throw Error(ErrorCode::kNotTwoSelfCentered, "decompose_triangle_free: input is not 2-self-centered");
  }
  if (!is_triangle_free(g)) throw Error(ErrorCode::kHasTriangle, "decompose_triangle_free: input has a triangle");

  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) { return g.degree(u) > g.degree(v); });
  GcbDecomposition d = peel(g, order, -1, -1);
  for (int y = 0; y < g.order() && !validate_gcb_spec(d.spec, reading).ok(); ++y) {
    for (int z = -1; z < g.order(); ++z) {
      GcbDecomposition candidate = peel(g, order, y, z);
      if (validate_gcb_spec(candidate.spec, reading).ok()) {
        d = std::move(candidate);
        break;
      }
    }
  }
  return d;
}

GcbSpec sample_gcb_spec(int budget, std::uint64_t seed, Item8Reading reading) {
  if (budget < 4) throw Error(ErrorCode::kBudgetTooSmall, "sample_gcb_spec: budget must be at least 4");
  budget = std::min(budget, kMaxVertices);
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    GcbSpec spec;
    const int t = uniform(0, budget / 3);
    if (t == 0) {
      spec.k = uniform(2, budget - 2);
      spec.l = uniform(2, budget - spec.k);
    } else {
      const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
      std::bernoulli_distribution coin(density);
      std::vector<VertexSet> rows(t, 0);
      for (int v = 1; v < t; ++v) {
        for (int u = 0; u < v; ++u) {
          if (coin(rng) && !(rows[u] & rows[v])) {
            rows[u] |= bit(v);
            rows[v] |= bit(u);
          }
        }
      }
      spec.core = Graph::from_rows(std::move(rows));
      spec.witness = construct_sbic(spec.core);
      std::shuffle(spec.witness.a_family.begin(), spec.witness.a_family.end(), rng);
      std::shuffle(spec.witness.b_family.begin(), spec.witness.b_family.end(), rng);
      const int rest = budget - t - spec.r() - spec.s();
      if (rest < 0) continue;
      spec.k = uniform(0, rest);
      spec.l = uniform(0, rest - spec.k);
    }
    if (validate_gcb_spec(spec, reading).ok()) return spec;
  }
  throw Error(ErrorCode::kRetryLimitExhausted, "sample_gcb_spec: no valid spec within the retry limit");
}

}  // namespace twosc
