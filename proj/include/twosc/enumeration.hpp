#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twosc/gcb.hpp"
#include "twosc/graph.hpp"

namespace twosc {

inline constexpr int kMaxEnumerationOrder = 8;

/// One representative per isomorphism class of connected graphs on n
/// vertices, 1 <= n <= 8, each in canonical form, sorted by graph6 string.
///
/// Graphs on n vertices are grown from the connected graphs on n - 1 by
/// attaching a new vertex to every non-empty neighbor set (every connected
/// graph has a non-cut vertex), keeping one graph per canonical form.
/// Throws Error(kOutOfRange).
std::vector<Graph> enumerate_connected(int n);

/// Graphs of a newline-separated graph6 file, in file order. Throws
/// ParseError with the line number of the first malformed record.
std::vector<Graph> ingest_graph6(const std::filesystem::path& path);

struct Counterexample {
  std::string graph6;
  std::string detail;

  auto operator<=>(const Counterexample&) const = default;
};

/// Result of checking one statement over a set of graphs.
/// `passes + counterexamples.size() == examined` always holds.
struct VerificationReport {
  std::string theorem;
  std::string description;
  int n_min = 0;
  int n_max = 0;
  long examined = 0;
  long passes = 0;
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0;

  void record(int n, const Graph& g, bool ok, const std::string& detail = {});
  /// Associative and commutative; counterexamples stay sorted.
  void merge(const VerificationReport& other);
  bool ok() const { return counterexamples.empty(); }
};

struct CountRow {
  int n = 0;
  long graphs = 0;
  long two_sc = 0;
  long edge_minimal = 0;
  long edge_maximal = 0;
  long triangle_free = 0;           // triangle-free and 2-self-centered
  long minimal_with_triangles = 0;  // edge-minimal 2-self-centered with a triangle

  bool operator==(const CountRow&) const = default;
};

/// An observation that is reported, not asserted.
struct Finding {
  std::string id;
  std::string description;
  long examined = 0;
  long count = 0;
  std::vector<std::string> examples;  // graph6, sorted, at most a few
};

struct VerificationSummary {
  std::vector<VerificationReport> reports;
  std::vector<CountRow> counts;
  std::vector<Finding> findings;
  double wall_seconds = 0;

  bool ok() const;
  const VerificationReport* report(const std::string& theorem) const;
  const Finding* finding(const std::string& id) const;
};

struct VerifyOptions {
  int n_max = 7;
  /// Orders above this only run the triangle-free decomposition round trip.
  int full_battery_max = 7;
  /// Read graphs from a graph6 file instead of the built-in generator.
  std::optional<std::filesystem::path> source;
  int workers = 1;
  Item8Reading reading = Item8Reading::kPrinted;
  long order_exploration_limit = 20000;
};

/// Runs every statement on every graph: the recognizer against BFS metrics,
/// the edge-maximal characterization, the complete bipartite statement, both
/// directions of the triangle-free lemma, the decomposition round trip, the
/// triangle classification, and the spanning sandwich. Graphs are split
/// across workers by the hash of their canonical graph6 string.
VerificationSummary verify_all(const VerifyOptions& options);

/// Stable theorem ids, in report order.
const std::vector<std::string>& theorem_ids();

}  // namespace twosc
