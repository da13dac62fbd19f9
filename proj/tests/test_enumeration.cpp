#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "support.hpp"
#include "twosc/canonical.hpp"
#include "twosc/enumeration.hpp"
#include "twosc/io.hpp"
#include "twosc/serialize.hpp"

using namespace twosc;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("twosc_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("small orders") {
  const auto three = enumerate_connected(3);
  REQUIRE(three.size() == 2);
  std::set<int> sizes;
  for (const Graph& g : three) sizes.insert(g.size());
  CHECK(sizes == std::set<int>{2, 3});
  CHECK(enumerate_connected(1) == std::vector<Graph>{Graph(1)});
  CHECK(enumerate_connected(2).size() == 1);
}

TEST_CASE("counts match the connected-graph sequence up to order 7") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == expected[n - 1]);
}

TEST_CASE("output is canonical, connected, distinct and sorted") {
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_connected(n);
    std::vector<std::string> keys;
    for (const Graph& g : graphs) {
      CHECK(canonical_form(g) == g);
      CHECK(oracle::connected(g));
      keys.push_back(to_graph6(g));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == keys.size());
  }
}

TEST_CASE("order 5 classes agree with a brute-force isomorphism partition") {
  std::vector<Graph> reps;
  for (const Graph& g : fixture::all_labeled(5)) {
    if (!oracle::connected(g)) continue;
    bool seen = false;
    for (const Graph& r : reps) seen = seen || oracle::isomorphic(g, r);
    if (!seen) reps.push_back(g);
  }
  CHECK(reps.size() == 21);
  const auto generated = enumerate_connected(5);
  for (const Graph& r : reps) {
    CHECK(std::count_if(generated.begin(), generated.end(),
                        [&](const Graph& g) { return oracle::isomorphic(g, r); }) == 1);
  }
}

TEST_CASE("generator matches the external catalogs up to order 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto catalog = ingest_graph6(std::filesystem::path(TWOSC_TEST_DATA) / ("connected" + std::to_string(n) + ".g6"));
    std::vector<std::string> external;
    for (const Graph& g : catalog) external.push_back(canonical_graph6(g));
    std::sort(external.begin(), external.end());
    std::vector<std::string> built;
    for (const Graph& g : enumerate_connected(n)) built.push_back(to_graph6(g));
    CHECK(external == built);
  }
}

TEST_CASE("out-of-range orders") {
  for (int n : {0, -1, 9}) {
    try {
      enumerate_connected(n);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kOutOfRange);
    }
  }
}

TEST_CASE("ingest") {
  CHECK(ingest_graph6(write_temp("c4.g6", "Cl\n")) == std::vector<Graph>{fixture::cycle(4)});
  CHECK(ingest_graph6(write_temp("empty.g6", "")).empty());
  try {
    ingest_graph6(write_temp("truncated.g6", "Cl\nCl\nDh\n"));
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(ingest_graph6("/nonexistent/twosc.g6"), Error);
}

TEST_CASE("verify_all small runs") {
  SUBCASE("n_max = 1") {
    const auto s = verify_all({.n_max = 1});
    CHECK(s.ok());
    REQUIRE(s.counts.size() == 1);
    CHECK(s.counts[0].graphs == 1);
    CHECK(s.counts[0].two_sc == 0);
    CHECK(s.counts[0].edge_minimal == 0);
    CHECK(s.counts[0].edge_maximal == 0);
    CHECK(s.counts[0].triangle_free == 0);
  }
  SUBCASE("n_max = 4") {
    const auto s = verify_all({.n_max = 4});
    CHECK(s.ok());
    REQUIRE(s.counts.size() == 4);
    CHECK(s.counts[3].graphs == 6);
    CHECK(s.counts[3].two_sc == 1);
  }
  SUBCASE("n_max = 5") {
    const auto s = verify_all({.n_max = 5});
    CHECK(s.ok());
    CHECK(s.reports.size() == theorem_ids().size());
    for (const auto& r : s.reports) {
      CHECK(r.counterexamples.empty());
      CHECK(r.passes == r.examined);
    }
    CHECK(s.report("recognizer-matches-metrics")->examined == 1 + 1 + 2 + 6 + 21);
    CHECK(s.report("no-such-theorem") == nullptr);
  }
}

TEST_CASE("verify_all from a catalog file") {
  const auto path = write_temp("mixed.g6", "Cl\nDhc\nCh\n");
  VerifyOptions options;
  options.source = path;
  const auto s = verify_all(options);
  CHECK(s.ok());
  CHECK(s.report("recognizer-matches-metrics")->examined == 3);
}

TEST_CASE("reports are identical across worker counts") {
  VerifyOptions one;
  one.n_max = 7;
  VerifyOptions many = one;
  many.workers = 5;
  auto a = verify_all(one);
  auto b = verify_all(many);
  a.wall_seconds = b.wall_seconds = 0;
  for (auto* s : {&a, &b})
    for (auto& r : s->reports) r.wall_seconds = 0;
  CHECK(nlohmann::json(a).dump() == nlohmann::json(b).dump());
}

TEST_CASE("report merging is associative and commutative") {
  VerificationReport x, y, z;
  x.record(4, fixture::cycle(4), true);
  y.record(5, fixture::cycle(5), false, "y");
  z.record(6, fixture::cycle(6), false, "z");
  z.record(3, fixture::path(3), true);
  VerificationReport left = x, right = z;
  left.merge(y);
  left.merge(z);
  right.merge(y);
  right.merge(x);
  CHECK(left.examined == 4);
  CHECK(left.passes == 2);
  CHECK(left.n_min == 3);
  CHECK(left.n_max == 6);
  CHECK(left.counterexamples.size() == right.counterexamples.size());
  for (std::size_t i = 0; i < left.counterexamples.size(); ++i) {
    CHECK(left.counterexamples[i].graph6 == right.counterexamples[i].graph6);
  }
  CHECK_FALSE(left.ok());
}

}  // TEST_SUITE
