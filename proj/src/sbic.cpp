#include "twosc/sbic.hpp"

#include <stdexcept>

namespace twosc {
namespace {

int index_of(SbicCondition c) { return static_cast<int>(c); }

void fail(SbicReport& report, SbicCondition c, SbicViolation v) {
  const int i = index_of(c);
  if (report.passed[i]) {
    report.passed[i] = false;
    report.first_violation[i] = std::move(v);
  }
}

void check_covers(const Graph& x, const std::vector<VertexSet>& family, char name, SbicReport& report) {
  VertexSet covered = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!family[i]) {
      fail(report, SbicCondition::kCovers,
           {std::string(1, name) + std::to_string(i + 1) + " is empty", {}, {}, idx});
    } else if (!is_independent(x, family[i])) {
      fail(report, SbicCondition::kCovers,
           {std::string(1, name) + std::to_string(i + 1) + " is not independent", {}, {}, idx});
    }
    covered |= family[i];
  }
  const VertexSet missing = x.vertices() & ~covered;
  if (missing) {
    const int v = std::countr_zero(missing);
    fail(report, SbicCondition::kCovers,
         {"vertex " + std::to_string(v) + " is in no " + std::string(1, name) + "-set", v, {}, {}});
  }
}

// Condition (iv) with `from` = A, `to` = B, and (v) with the roles swapped.
void check_cross(const DistanceProfile& profile, int n, const std::vector<VertexSet>& from,
                 const std::vector<VertexSet>& to, SbicCondition c, char from_name, char to_name,
                 SbicReport& report) {
  for (int u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (distance_to_set(profile, u, from[i]) < 2) continue;
      bool found = false;
      for (VertexSet other : to) {
        if (!(other & from[i]) && contains(other, u)) {
          found = true;
          break;
        }
      }
      if (!found) {
        fail(report, c,
             {"d(" + std::to_string(u) + ", " + std::string(1, from_name) + std::to_string(i + 1) +
                  ") >= 2 but no disjoint " + std::string(1, to_name) + "-set contains it",
              u, {}, static_cast<int>(i)});
        return;
      }
    }
  }
}

}  // namespace

bool SbicReport::ok() const {
  for (bool p : passed) {
    if (!p) return false;
  }
  return true;
}

std::string_view to_string(SbicCondition c) {
  switch (c) {
    case SbicCondition::kTriangleFree: return "triangle-free";
    case SbicCondition::kCovers: return "independent-covers";
    case SbicCondition::kFarPairs: return "far-pairs-share-a-set";
    case SbicCondition::kAToB: return "a-to-disjoint-b";
    case SbicCondition::kBToA: return "b-to-disjoint-a";
  }
  return "unknown";
}

SbicReport verify_sbic(const Graph& x, const SbicWitness& w) {
  for (const auto* family : {&w.a_family, &w.b_family}) {
    for (VertexSet s : *family) {
      if (s & ~x.vertices()) throw Error(ErrorCode::kSetOutOfRange, "witness set names a vertex outside X");
    }
  }
  SbicReport report;
  report.passed.fill(true);
  const int n = x.order();

  const auto tri = triangles(x);
  if (!tri.empty()) {
    fail(report, SbicCondition::kTriangleFree,
         {"triangle " + std::to_string(tri[0][0]) + "-" + std::to_string(tri[0][1]) + "-" +
              std::to_string(tri[0][2]),
          tri[0][0], tri[0][1], {}});
  }

  check_covers(x, w.a_family, 'A', report);
  check_covers(x, w.b_family, 'B', report);

  const DistanceProfile profile(x);
  for (int u = 0; u < n && report.holds(SbicCondition::kFarPairs); ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (profile.distance(u, v) < 3) continue;
      const VertexSet pair = bit(u) | bit(v);
      bool shared = false;
      for (const auto* family : {&w.a_family, &w.b_family}) {
        for (VertexSet s : *family) shared = shared || (s & pair) == pair;
      }
      if (!shared) {
        fail(report, SbicCondition::kFarPairs,
             {"far pair " + std::to_string(u) + "," + std::to_string(v) + " shares no set", u, v, {}});
        break;
      }
    }
  }

  check_cross(profile, n, w.a_family, w.b_family, SbicCondition::kAToB, 'A', 'B', report);
  check_cross(profile, n, w.b_family, w.a_family, SbicCondition::kBToA, 'B', 'A', report);
  return report;
}

VertexSet extend_independent(const Graph& g, VertexSet seed, VertexSet forbidden) {
  VertexSet set = seed;
  VertexSet blocked = forbidden | seed;
  for (int v : members(seed)) blocked |= g.neighbors(v);
  for (int v : members(g.vertices() & ~blocked)) {
    if (g.neighbors(v) & set) continue;
    set |= bit(v);
  }
  return set;
}

SbicWitness construct_sbic(const Graph& x) {
  if (!is_triangle_free(x)) throw Error(ErrorCode::kHasTriangle, "construct_sbic: X has a triangle");
  SbicWitness w;
  for (int v = 0; v < x.order(); ++v) {
    w.a_family.push_back(bit(v));
    w.b_family.push_back(bit(v));
  }
  // Each repair is permanent and the added sets are maximal, so the number of
  // repairs is bounded by the far pairs plus the singleton incidences.
  const long limit = 3L * x.order() * x.order() + 1;
  for (long repairs = 0;; ++repairs) {
    const SbicReport report = verify_sbic(x, w);
    if (report.ok()) return w;
    if (repairs > limit) throw std::logic_error("construct_sbic: repair loop did not converge");
    if (const auto& far = report.first_violation[index_of(SbicCondition::kFarPairs)]) {
      w.a_family.push_back(extend_independent(x, bit(*far->vertex) | bit(*far->other_vertex)));
    } else if (const auto& ab = report.first_violation[index_of(SbicCondition::kAToB)]) {
      w.b_family.push_back(extend_independent(x, bit(*ab->vertex), w.a_family[*ab->set_index]));
    } else if (const auto& ba = report.first_violation[index_of(SbicCondition::kBToA)]) {
      w.a_family.push_back(extend_independent(x, bit(*ba->vertex), w.b_family[*ba->set_index]));
    } else {
      throw std::logic_error("construct_sbic: singleton covers failed a structural condition");
    }
  }
}

}  // namespace twosc
