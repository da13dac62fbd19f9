#include "twosc/serialize.hpp"

#include "twosc/io.hpp"

namespace twosc {
namespace {

json set_json(VertexSet s) { return to_vector(s); }

VertexSet set_from_json(const json& j) {
  const auto vertices = j.get<std::vector<int>>();
  return to_set(vertices);
}

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

}  // namespace

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }

void to_json(json& j, const Graph& g) {
  j = json{{"n", g.order()}, {"edges", g.edges()}, {"graph6", to_graph6(g)}};
}

void from_json(const json& j, Graph& g) {
  if (j.contains("graph6")) {
    g = from_graph6(j.at("graph6").get<std::string>());
    return;
  }
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    const auto pair = e.get<std::vector<int>>();
    if (pair.size() != 2) throw Error(ErrorCode::kParse, "edge must have two endpoints");
    edges.emplace_back(pair[0], pair[1]);
  }
  g = Graph(n, edges);
}

void to_json(json& j, const TwoScVerdict& v) {
  j = json{{"two_self_centered", v.is_2sc},
           {"violating_vertex", optional_json(v.violating_vertex)},
           {"violating_pair", optional_json(v.violating_pair)}};
}

void to_json(json& j, const EdgeMaximalCertificate& c) {
  json components = json::array();
  for (const auto& part : c.components) {
    components.push_back({{"vertices", set_json(part.vertices)}, {"star_center", optional_json(part.star_center)}});
  }
  j = json{{"edge_maximal", c.is_edge_maximal},
           {"complement_disconnected", c.complement_disconnected},
           {"complement_components", components}};
}

void to_json(json& j, const EdgeMinimalCertificate& c) {
  j = json{{"edge_minimal", c.is_edge_minimal}, {"removable_edge", optional_json(c.removable_edge)}};
}

void to_json(json& j, const CriticalTriple& t) { j = json{{"critical", t.critical}, {"pair", {t.u, t.v}}}; }

void to_json(json& j, const SbicWitness& w) {
  json a = json::array();
  json b = json::array();
  for (VertexSet s : w.a_family) a.push_back(set_json(s));
  for (VertexSet s : w.b_family) b.push_back(set_json(s));
  j = json{{"A", a}, {"B", b}};
}

void from_json(const json& j, SbicWitness& w) {
  w = {};
  for (const auto& s : j.at("A")) w.a_family.push_back(set_from_json(s));
  for (const auto& s : j.at("B")) w.b_family.push_back(set_from_json(s));
}

void to_json(json& j, const SbicReport& r) {
  json conditions = json::array();
  for (int i = 0; i < kSbicConditions; ++i) {
    json c{{"condition", to_string(static_cast<SbicCondition>(i))}, {"passed", r.passed[i]}};
    if (const auto& v = r.first_violation[i]) {
      c["violation"] = {{"detail", v->detail},
                        {"vertex", optional_json(v->vertex)},
                        {"other_vertex", optional_json(v->other_vertex)},
                        {"set_index", optional_json(v->set_index)}};
    }
    conditions.push_back(c);
  }
  j = json{{"ok", r.ok()}, {"conditions", conditions}};
}

void to_json(json& j, const GcbSpec& s) {
  j = json{{"k", s.k}, {"l", s.l}, {"X", s.core}, {"witness", s.witness}};
}

void from_json(const json& j, GcbSpec& s) {
  s.k = j.at("k").get<int>();
  s.l = j.at("l").get<int>();
  s.core = j.contains("X") ? j.at("X").get<Graph>() : Graph(0);
  s.witness = j.contains("witness") ? j.at("witness").get<SbicWitness>() : SbicWitness{};
}

void to_json(json& j, const GcbValidation& v) {
  json items = json::array();
  for (int i = 0; i < kGcbItems; ++i) {
    const auto& item = v.items[i];
    json entry{{"item", i + 1}, {"applicable", item.applicable}, {"passed", item.passed}};
    if (!item.detail.empty()) entry["detail"] = item.detail;
    items.push_back(entry);
  }
  j = json{{"ok", v.ok()}, {"items", items}};
  if (v.sbic_checked) j["sbic"] = v.sbic;
}

void to_json(json& j, const GcbDecomposition& d) {
  j = d.spec;
  json roles = json::array();
  for (std::size_t v = 0; v < d.roles.size(); ++v) {
    roles.push_back({{"vertex", v},
                     {"role", to_string(d.roles[v].role)},
                     {"index", d.roles[v].index},
                     {"position", d.position[v]}});
  }
  j["roles"] = roles;
}

void to_json(json& j, const ReductionStep& s) {
  j = json{{"removed", s.removed},
           {"u", s.u},
           {"v", s.v},
           {"u_critical_for_v_and", set_json(s.u_partners)},
           {"v_critical_for_u_and", set_json(s.v_partners)},
           {"added", s.added},
           {"triangles_before", s.triangles_before},
           {"triangles_after", s.triangles_after},
           {"result_two_self_centered", s.result_is_2sc},
           {"created_triangle", s.created_triangle}};
}

void to_json(json& j, const ReductionTrace& t) {
  j = json{{"succeeded", t.succeeded}, {"steps", t.steps}, {"final", t.final}};
  if (!t.stop_reason.empty()) j["stop_reason"] = t.stop_reason;
}

void to_json(json& j, const TriangleClassification& c) {
  j = json{{"edge_minimal", c.edge_minimal},
           {"every_triangle_edge_has_critical_endpoint", c.every_triangle_edge_has_critical_endpoint},
           {"uncovered_edge", optional_json(c.uncovered_edge)},
           {"reduction", c.trace}};
}

void to_json(json& j, const VerificationReport& r) {
  json counterexamples = json::array();
  for (const auto& c : r.counterexamples) counterexamples.push_back({{"graph6", c.graph6}, {"detail", c.detail}});
  j = json{{"theorem", r.theorem},
           {"description", r.description},
           {"n_min", r.n_min},
           {"n_max", r.n_max},
           {"examined", r.examined},
           {"passes", r.passes},
           {"counterexamples", counterexamples},
           {"wall_seconds", r.wall_seconds}};
}

void to_json(json& j, const CountRow& r) {
  j = json{{"n", r.n},
           {"graphs", r.graphs},
           {"two_self_centered", r.two_sc},
           {"edge_minimal", r.edge_minimal},
           {"edge_maximal", r.edge_maximal},
           {"triangle_free", r.triangle_free},
           {"edge_minimal_with_triangles", r.minimal_with_triangles}};
}

void to_json(json& j, const Finding& f) {
  j = json{{"id", f.id}, {"description", f.description}, {"examined", f.examined}, {"count", f.count},
           {"examples", f.examples}};
}

void to_json(json& j, const VerificationSummary& s) {
  j = json{{"ok", s.ok()}, {"reports", s.reports}, {"counts", s.counts}, {"findings", s.findings},
           {"wall_seconds", s.wall_seconds}};
}

json check_report(const Graph& g) {
  const TwoScVerdict verdict = is_two_self_centered(g);
  json j{{"graph", g}, {"verdict", verdict}};
  if (!verdict.is_2sc) return j;
  j["edge_maximal"] = is_edge_maximal(g);
  j["edge_minimal"] = is_edge_minimal(g);
  j["critical_triples"] = critical_triples(g);
  json tri = json::array();
  for (const Triangle& t : triangles(g)) tri.push_back(t);
  j["triangles"] = tri;
  return j;
}

}  // namespace twosc
