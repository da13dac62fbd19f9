#include "twosc/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <thread>
#include <unordered_set>

#include "twosc/canonical.hpp"
#include "twosc/io.hpp"
#include "twosc/recognition.hpp"
#include "twosc/reduction.hpp"

namespace twosc {
namespace {

using Clock = std::chrono::steady_clock;

enum Theorem {
  kRecognizer,
  kEdgeMaximal,
  kBipartite,
  kTriangleFreeMinimal,
  kMinimalNoCriticalTriangleFree,
  kGcbRoundTrip,
  kTriangleClassification,
  kSandwich,
  kTheoremCount,
};

const char* const kDescriptions[kTheoremCount] = {
    "degree/common-neighbor recognizer agrees with radius = diameter = 2 from BFS",
    "complement-star characterization agrees with trying every absent edge",
    "edge-minimal 2SC with disconnected complement iff K_{k,l} with k, l >= 2",
    "every triangle-free 2SC graph is edge-minimal",
    "every edge-minimal 2SC graph without critical triples is triangle-free",
    "triangle-free 2SC graphs decompose into a valid GCB spec that rebuilds the labeled input",
    "critical-endpoint condition plus successful reduction agrees with edge-minimality",
    "greedy edge-minimal spanning subgraph and edge-maximal spanning supergraph exist",
};

enum FindingId {
  kDefaultOrderFails,
  kRescuedByOtherOrder,
  kOrderDependentOnMinimal,
  kUnsoundCandidate,
  kItem8Disagree,
  kFindingCount,
};

const char* const kFindingIds[kFindingCount] = {
    "reduction-default-order-fails",
    "reduction-rescued-by-other-order",
    "reduction-order-dependent-on-minimal",
    "reduction-unsound-candidate",
    "item8-readings-disagree",
};

const char* const kFindingDescriptions[kFindingCount] = {
    "2SC graphs with triangles whose deterministic reduction does not reach a triangle-free 2SC graph",
    "of those, graphs where some other order of qualifying edges succeeds",
    "edge-minimal 2SC graphs with triangles on which some order of qualifying edges fails",
    "edge-minimal 2SC graphs with triangles where some qualifying step creates a triangle or leaves 2SC",
    "triangle-free 2SC decompositions accepted by one reading of the l = 0 case and rejected by the other",
};

constexpr std::size_t kFindingExamples = 8;

struct Tally {
  std::vector<VerificationReport> reports;
  std::map<int, CountRow> counts;
  std::vector<Finding> findings;

  Tally() : reports(kTheoremCount), findings(kFindingCount) {
    for (int i = 0; i < kTheoremCount; ++i) {
      reports[i].theorem = theorem_ids()[i];
      reports[i].description = kDescriptions[i];
    }
    for (int i = 0; i < kFindingCount; ++i) {
      findings[i].id = kFindingIds[i];
      findings[i].description = kFindingDescriptions[i];
    }
  }

  void note(FindingId id, const Graph& g, bool hit) {
    Finding& f = findings[id];
    ++f.examined;
    if (hit) {
      ++f.count;
      f.examples.push_back(to_graph6(g));
    }
  }

  void merge(const Tally& other) {
    for (int i = 0; i < kTheoremCount; ++i) reports[i].merge(other.reports[i]);
    for (const auto& [n, row] : other.counts) {
      CountRow& mine = counts[n];
      mine.n = n;
      mine.graphs += row.graphs;
      mine.two_sc += row.two_sc;
      mine.edge_minimal += row.edge_minimal;
      mine.edge_maximal += row.edge_maximal;
      mine.triangle_free += row.triangle_free;
      mine.minimal_with_triangles += row.minimal_with_triangles;
    }
    for (int i = 0; i < kFindingCount; ++i) {
      findings[i].examined += other.findings[i].examined;
      findings[i].count += other.findings[i].count;
      findings[i].examples.insert(findings[i].examples.end(), other.findings[i].examples.begin(),
                                  other.findings[i].examples.end());
    }
  }
};

template <typename F>
void timed(VerificationReport& report, F&& body) {
  const auto start = Clock::now();
  body();
  report.wall_seconds += std::chrono::duration<double>(Clock::now() - start).count();
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void check_round_trip(const Graph& g, const VerifyOptions& options, Tally& tally) {
  const int n = g.order();
  const GcbDecomposition d = decompose_triangle_free(g, options.reading);
  const bool printed_ok = validate_gcb_spec(d.spec, Item8Reading::kPrinted).ok();
  const bool symmetric_ok = validate_gcb_spec(d.spec, Item8Reading::kSymmetric).ok();
  tally.note(kItem8Disagree, g, printed_ok != symmetric_ok);

  std::string failure;
  const bool valid = options.reading == Item8Reading::kPrinted ? printed_ok : symmetric_ok;
  if (!valid) failure = "decomposition fails spec validation";
  const Graph rebuilt = assemble_gcb(d.spec);
  if (rebuilt != relabel(g, d.position)) failure += (failure.empty() ? "" : "; ") + std::string("rebuild differs");
  if (gcb_edge_count(d.spec) != rebuilt.size()) failure += (failure.empty() ? "" : "; ") + std::string("edge count formula");
  tally.reports[kGcbRoundTrip].record(n, g, failure.empty(), failure);
}

void run_battery(const Graph& g, bool full, const VerifyOptions& options, Tally& tally) {
  const int n = g.order();
  auto& reports = tally.reports;
  CountRow& row = tally.counts[n];
  row.n = n;
  ++row.graphs;

  bool is_2sc = false;
  timed(reports[kRecognizer], [&] {
    is_2sc = is_two_self_centered(g).is_2sc;
    if (!full) return;
    const bool metric = radius_and_diameter_are_two(g);
    reports[kRecognizer].record(n, g, is_2sc == metric,
                                "recognizer says " + std::to_string(is_2sc) + ", metrics say " + std::to_string(metric));
  });
  if (full) {
    timed(reports[kBipartite], [&] { reports[kBipartite].record(n, g, check_bipartite_proposition(g)); });
  }
  if (!is_2sc) return;
  ++row.two_sc;

  const bool triangle_free = is_triangle_free(g);
  const bool minimal = is_edge_minimal(g).is_edge_minimal;
  if (minimal) ++row.edge_minimal;
  if (is_edge_maximal(g).is_edge_maximal) ++row.edge_maximal;
  if (triangle_free) ++row.triangle_free;
  if (minimal && !triangle_free) ++row.minimal_with_triangles;

  if (triangle_free) {
    timed(reports[kGcbRoundTrip], [&] { check_round_trip(g, options, tally); });
  }
  if (!full) return;

  timed(reports[kEdgeMaximal], [&] {
    const bool by_complement = is_edge_maximal(g).is_edge_maximal;
    const bool by_definition = is_edge_maximal_by_definition(g);
    reports[kEdgeMaximal].record(n, g, by_complement == by_definition,
                                 "complement-star " + std::to_string(by_complement) + ", definition " +
                                     std::to_string(by_definition));
  });

  timed(reports[kTriangleFreeMinimal], [&] {
    reports[kTriangleFreeMinimal].record(n, g, check_triangle_free_lemma(g), "triangle-free but not edge-minimal");
  });
  timed(reports[kMinimalNoCriticalTriangleFree], [&] {
    reports[kMinimalNoCriticalTriangleFree].record(n, g, check_triangle_free_lemma_converse(g),
                                                   "edge-minimal, no critical triple, has a triangle");
  });

  if (!triangle_free) {
    timed(reports[kTriangleClassification], [&] {
      const TriangleClassification c = classify_edge_minimal_with_triangles(g);
      std::string failure;
      if (c.edge_minimal != minimal) {
        failure = "classification " + std::to_string(c.edge_minimal) + ", edge-minimal " + std::to_string(minimal);
        if (c.uncovered_edge) failure += ", uncovered edge " + edge_text(*c.uncovered_edge);
        if (!c.trace.succeeded) failure += ", reduction stopped: " + c.trace.stop_reason;
      }
      if (c.trace.succeeded) {
        for (const ReductionStep& step : c.trace.steps) {
          if (step.triangles_after >= step.triangles_before || step.created_triangle || !step.result_is_2sc) {
            failure += (failure.empty() ? "" : "; ") + std::string("unsound step on ") + edge_text(step.removed);
          }
        }
        if (!is_triangle_free(c.trace.final) || !is_two_self_centered(c.trace.final).is_2sc) {
          failure += (failure.empty() ? "" : "; ") + std::string("final graph not triangle-free 2SC");
        }
      }
      reports[kTriangleClassification].record(n, g, failure.empty(), failure);

      tally.note(kDefaultOrderFails, g, !c.trace.succeeded);
      if (!c.trace.succeeded) {
        const OrderExploration all = explore_reduction_orders(g, options.order_exploration_limit);
        tally.note(kRescuedByOtherOrder, g, all.successful > 0);
      }
      if (minimal) {
        const OrderExploration all = explore_reduction_orders(g, options.order_exploration_limit);
        tally.note(kOrderDependentOnMinimal, g, all.successful < all.sequences);
        bool unsound = false;
        for (const Edge& e : qualifying_edges(g)) unsound = unsound || !is_sound(apply_star_procedure(g, e.u, e.v).second);
        tally.note(kUnsoundCandidate, g, unsound);
      }
    });
  }

  timed(reports[kSandwich], [&] {
    const Sandwich s = find_sandwich(g);
    std::string failure;
    if (!is_spanning_subgraph(s.minimal, g) || !is_two_self_centered(s.minimal).is_2sc ||
        !is_edge_minimal(s.minimal).is_edge_minimal) {
      failure = "no edge-minimal spanning subgraph found";
    }
    if (!is_spanning_subgraph(g, s.maximal) || !is_two_self_centered(s.maximal).is_2sc ||
        !is_edge_maximal_by_definition(s.maximal)) {
      failure += (failure.empty() ? "" : "; ") + std::string("no edge-maximal spanning supergraph found");
    }
    reports[kSandwich].record(n, g, failure.empty(), failure);
  });
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "recognizer-matches-metrics",
      "edge-maximal-characterization",
      "complete-bipartite-proposition",
      "triangle-free-implies-minimal",
      "minimal-without-critical-is-triangle-free",
      "gcb-round-trip",
      "triangle-classification",
      "sandwich",
  };
  return ids;
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kOutOfRange, "enumerate_connected: n must lie in 1.." + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> found;
    for (const Graph& parent : level) {
      std::vector<VertexSet> rows(parent.rows().begin(), parent.rows().end());
      rows.push_back(0);
      const int fresh = order - 1;
      for (VertexSet attach = 1; attach < bit(fresh); ++attach) {
        std::vector<VertexSet> child = rows;
        child[fresh] = attach;
        for (int v : members(attach)) child[v] |= bit(fresh);
        Graph canon = canonical_form(Graph::from_rows(std::move(child)));
        std::string key = to_graph6(canon);
        if (seen.insert(key).second) found.emplace_back(std::move(key), std::move(canon));
      }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, g] : found) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> ingest_graph6(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  return read_graph6_stream(in);
}

void VerificationReport::record(int n, const Graph& g, bool ok, const std::string& detail) {
  if (examined == 0) {
    n_min = n_max = n;
  } else {
    n_min = std::min(n_min, n);
    n_max = std::max(n_max, n);
  }
  ++examined;
  if (ok) {
    ++passes;
  } else {
    counterexamples.push_back({to_graph6(g), detail});
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  if (other.examined > 0) {
    n_min = examined == 0 ? other.n_min : std::min(n_min, other.n_min);
    n_max = examined == 0 ? other.n_max : std::max(n_max, other.n_max);
  }
  examined += other.examined;
  passes += other.passes;
  wall_seconds += other.wall_seconds;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
  std::sort(counterexamples.begin(), counterexamples.end());
}

bool VerificationSummary::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
}

const VerificationReport* VerificationSummary::report(const std::string& theorem) const {
  for (const auto& r : reports) {
    if (r.theorem == theorem) return &r;
  }
  return nullptr;
}

const Finding* VerificationSummary::finding(const std::string& id) const {
  for (const auto& f : findings) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

VerificationSummary verify_all(const VerifyOptions& options) {
  const auto start = Clock::now();
  std::vector<Graph> graphs;
  if (options.source) {
    graphs = ingest_graph6(*options.source);
  } else {
    for (int n = 1; n <= std::min(options.n_max, kMaxEnumerationOrder); ++n) {
      std::vector<Graph> level = enumerate_connected(n);
      graphs.insert(graphs.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
  }

  const int workers = std::max(1, options.workers);
  std::vector<Tally> tallies(workers);
  auto work = [&](int id) {
    const std::hash<std::string> hasher;
    for (const Graph& g : graphs) {
      if (options.source && g.order() > options.n_max) continue;
      const std::string key = options.source ? canonical_graph6(g) : to_graph6(g);
      if (static_cast<int>(hasher(key) % static_cast<std::size_t>(workers)) != id) continue;
      run_battery(g, g.order() <= options.full_battery_max, options, tallies[id]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  Tally total;
  for (const Tally& t : tallies) total.merge(t);
  VerificationSummary summary;
  summary.reports = std::move(total.reports);
  for (auto& [n, row] : total.counts) summary.counts.push_back(row);
  for (Finding& f : total.findings) {
    std::sort(f.examples.begin(), f.examples.end());
    if (f.examples.size() > kFindingExamples) f.examples.resize(kFindingExamples);
    summary.findings.push_back(std::move(f));
  }
  summary.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return summary;
}

}  // namespace twosc
