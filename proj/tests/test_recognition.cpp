#include <doctest.h>

#include "support.hpp"
#include "twosc/enumeration.hpp"
#include "twosc/recognition.hpp"

using namespace twosc;

namespace {

std::vector<std::array<int, 3>> triples_of(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (const auto& t : critical_triples(g)) out.push_back({t.critical, t.u, t.v});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("recognition") {

TEST_CASE("complete graphs are not 2-self-centered") {
  for (int n = 1; n <= 6; ++n) {
    const auto v = is_two_self_centered(fixture::complete(n));
    CHECK_FALSE(v.is_2sc);
    CHECK(v.violating_vertex == 0);
  }
}

TEST_CASE("empty graph is not 2-self-centered") {
  CHECK_FALSE(is_two_self_centered(Graph(0)).is_2sc);
  CHECK_FALSE(radius_and_diameter_are_two(Graph(0)));
}

TEST_CASE("C4 is 2-self-centered, minimal and maximal") {
  const Graph c4 = fixture::cycle(4);
  const auto v = is_two_self_centered(c4);
  CHECK(v.is_2sc);
  CHECK_FALSE(v.violating_vertex);
  CHECK_FALSE(v.violating_pair);
  CHECK(is_edge_minimal(c4).is_edge_minimal);
  const auto cert = is_edge_maximal(c4);
  CHECK(cert.is_edge_maximal);
  CHECK(cert.complement_disconnected);
  REQUIRE(cert.components.size() == 2);
  CHECK(cert.components[0].vertices == (bit(0) | bit(2)));
  CHECK(cert.components[0].star_center == 0);
}

TEST_CASE("P4 reports the far pair") {
  const auto v = is_two_self_centered(fixture::path(4));
  CHECK_FALSE(v.is_2sc);
  CHECK(v.violating_vertex == 0);
  REQUIRE(v.violating_pair);
  CHECK(*v.violating_pair == Edge(0, 3));
}

TEST_CASE("disconnected graph with valid degrees fails on a pair") {
  const Graph two_c4(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  const auto v = is_two_self_centered(two_c4);
  CHECK_FALSE(v.is_2sc);
  CHECK_FALSE(v.violating_vertex);
  CHECK(v.violating_pair == Edge(0, 4));
}

TEST_CASE("edge-maximality") {
  SUBCASE("C5 has a connected complement") {
    const auto cert = is_edge_maximal(fixture::cycle(5));
    CHECK_FALSE(cert.is_edge_maximal);
    CHECK_FALSE(cert.complement_disconnected);
  }
  SUBCASE("complement K_{1,2} + K_{1,1}") {
    const Graph g = complement(Graph(5, {{0, 1}, {0, 2}, {3, 4}}));
    const auto cert = is_edge_maximal(g);
    CHECK(cert.is_edge_maximal);
    REQUIRE(cert.components.size() == 2);
    CHECK(cert.components[0].star_center == 0);
    CHECK(cert.components[1].star_center == 3);
    CHECK(oracle::edge_maximal(g));
  }
  SUBCASE("complement with a non-star component") {
    // Complement is P4 + K2: disconnected but P4 is not a star.
    const Graph g = complement(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}}));
    REQUIRE(is_two_self_centered(g).is_2sc);
    const auto cert = is_edge_maximal(g);
    CHECK(cert.complement_disconnected);
    CHECK_FALSE(cert.is_edge_maximal);
    CHECK_FALSE(cert.components[0].star_center);
    CHECK_FALSE(oracle::edge_maximal(g));
  }
  SUBCASE("requires a 2-self-centered input") {
    try {
      is_edge_maximal(fixture::path(4));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotTwoSelfCentered);
    }
    CHECK_THROWS_AS(is_edge_maximal_by_definition(fixture::path(4)), Error);
  }
}

TEST_CASE("edge-minimality") {
  CHECK(is_edge_minimal(fixture::petersen()).is_edge_minimal);
  CHECK(is_edge_minimal(fixture::complete_bipartite(3, 3)).is_edge_minimal);
  // C5 plus chord 0-2: removing the chord gives C5 back.
  const Graph chord = with_edge(fixture::cycle(5), {0, 2});
  REQUIRE(is_two_self_centered(chord).is_2sc);
  const auto cert = is_edge_minimal(chord);
  CHECK_FALSE(cert.is_edge_minimal);
  CHECK(cert.removable_edge == Edge(0, 2));
  CHECK_THROWS_AS(is_edge_minimal(fixture::complete(4)), Error);
}

TEST_CASE("critical triples") {
  CHECK(critical_triples(fixture::complete_bipartite(3, 3)).empty());
  CHECK(critical_triples(fixture::cycle(4)).empty());
  CHECK(triples_of(fixture::cycle(5)) == oracle::critical_triples(fixture::cycle(5)));
  CHECK(critical_triples(fixture::cycle(5)).size() == 5);

  const auto ex2 = triples_of(fixture::example2());
  CHECK(ex2 == oracle::critical_triples(fixture::example2()));
  const std::array<int, 3> xyz{fixture::kEx2X, fixture::kEx2Y, fixture::kEx2Z};
  CHECK(std::find(ex2.begin(), ex2.end(), xyz) != ex2.end());

  CHECK_THROWS_AS(critical_triples(fixture::path(4)), Error);
}

TEST_CASE("critical partners") {
  const Graph ex2 = fixture::example2();
  CHECK(critical_partners(ex2, fixture::kEx2X, fixture::kEx2Y) == bit(fixture::kEx2Z));
  CHECK(critical_partners(ex2, fixture::kEx2X, fixture::kEx2Z) == bit(fixture::kEx2Y));
  CHECK(critical_partners(fixture::complete_bipartite(2, 2), 2, 0) == 0);
  const Graph ex1 = fixture::example1_corrected();
  CHECK(contains(critical_partners(ex1, 6, 7), 4));
}

TEST_CASE("complete bipartite parts") {
  const auto parts = complete_bipartite_parts(fixture::complete_bipartite(2, 3));
  REQUIRE(parts);
  CHECK(parts->first == 0b00011);
  CHECK(parts->second == 0b11100);
  CHECK(complete_bipartite_parts(Graph(2, {{0, 1}})));
  CHECK_FALSE(complete_bipartite_parts(fixture::cycle(6)));
  CHECK_FALSE(complete_bipartite_parts(fixture::complete(3)));
  CHECK_FALSE(complete_bipartite_parts(Graph(3)));
  CHECK_FALSE(complete_bipartite_parts(Graph(1)));
}

TEST_CASE("bipartite proposition on fixtures") {
  CHECK(check_bipartite_proposition(fixture::complete_bipartite(2, 3)));
  CHECK(check_bipartite_proposition(fixture::cycle(5)));
  CHECK(check_bipartite_proposition(fixture::cycle(6)));
  CHECK(check_bipartite_proposition(fixture::complete_bipartite(1, 3)));
  CHECK(check_bipartite_proposition(fixture::path(4)));
}

TEST_CASE("triangle-free lemma and converse on fixtures") {
  CHECK(check_triangle_free_lemma(fixture::petersen()));
  CHECK(check_triangle_free_lemma(fixture::example2()));
  CHECK(check_triangle_free_lemma(fixture::example1_corrected()));
  CHECK(check_triangle_free_lemma_converse(fixture::example1_corrected()));
  CHECK_THROWS_AS(check_triangle_free_lemma(fixture::path(4)), Error);
  CHECK_THROWS_AS(check_triangle_free_lemma_converse(fixture::path(4)), Error);
}

TEST_CASE("sandwich") {
  const Graph chord = with_edge(fixture::cycle(5), {0, 2});
  const auto s = find_sandwich(chord);
  CHECK(s.minimal == fixture::cycle(5));
  CHECK(is_spanning_subgraph(s.minimal, chord));
  CHECK(is_spanning_subgraph(chord, s.maximal));
  CHECK(is_edge_maximal(s.maximal).is_edge_maximal);
  CHECK_FALSE(is_spanning_subgraph(fixture::cycle(5), fixture::path(5)));
  CHECK_FALSE(is_spanning_subgraph(Graph(3), Graph(4)));
  CHECK_THROWS_AS(find_sandwich(fixture::path(4)), Error);
}

TEST_CASE("recognizer agrees with Floyd-Warshall on every labeled graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : fixture::all_labeled(n)) {
      const bool expected = oracle::two_sc(g);
      CHECK(is_two_self_centered(g).is_2sc == expected);
      CHECK(radius_and_diameter_are_two(g) == expected);
    }
  }
}

TEST_CASE("certificates agree with brute force on connected graphs up to 7 vertices") {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_two_self_centered(g).is_2sc) continue;
      CHECK(is_edge_maximal(g).is_edge_maximal == oracle::edge_maximal(g));
      CHECK(is_edge_maximal_by_definition(g) == oracle::edge_maximal(g));
      CHECK(is_edge_minimal(g).is_edge_minimal == oracle::edge_minimal(g));
      CHECK(triples_of(g) == oracle::critical_triples(g));
    }
  }
}

}  // TEST_SUITE
