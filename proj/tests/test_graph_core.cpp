#include <doctest.h>

#include <set>

#include "zetacode/graph.hpp"
#include "zetacode/rng.hpp"

using namespace zetacode;

namespace {

UndirectedMultigraph triangle() { return {3, {{0, 1}, {1, 2}, {2, 0}}}; }

UndirectedMultigraph k4() {
  return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

}  // namespace

TEST_CASE("graph construction and validation") {
  UndirectedMultigraph single(2, {{0, 1}});
  CHECK(single.num_vertices() == 2);
  CHECK(single.num_edges() == 1);

  UndirectedMultigraph doubled(2, {{0, 1}, {0, 1}});
  CHECK(doubled.num_edges() == 2);
  CHECK_FALSE(doubled.is_simple());
  CHECK(doubled.degree(0) == 2);

  CHECK(triangle().is_simple());
  CHECK(triangle().min_degree() == 2);

  CHECK_THROWS_AS(UndirectedMultigraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(UndirectedMultigraph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("components") {
  UndirectedMultigraph g(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(g.num_components() == 2);
  CHECK_FALSE(g.connected());
  auto labels = g.component_labels();
  CHECK(labels[0] == labels[2]);
  CHECK(labels[3] == labels[4]);
  CHECK(labels[0] != labels[3]);
  CHECK(triangle().connected());
  CHECK(UndirectedMultigraph(0, {}).num_components() == 0);
}

TEST_CASE("directed doubling") {
  auto g = triangle();
  DirectedEdgeSet d(g);
  CHECK(d.size() == 6);
  CHECK(d.tail(0) == 0);
  CHECK(d.head(0) == 1);
  CHECK(d.tail(3) == 1);
  CHECK(d.head(3) == 0);
  CHECK(d.inverse(0) == 3);
  CHECK(d.inverse(3) == 0);
  CHECK(d.undirected(5) == 2);
}

TEST_CASE("hashimoto matrix of the triangle") {
  EdgeAdjacencyMatrix B = hashimoto_matrix(triangle());
  CHECK(B.dim() == 6);
  // two directed 3-cycles: 0->1->2->0 and 3->5->4->3
  CHECK(B.successors(0) == std::vector<std::uint32_t>{1});
  CHECK(B.successors(1) == std::vector<std::uint32_t>{2});
  CHECK(B.successors(2) == std::vector<std::uint32_t>{0});
  CHECK(B.successors(3) == std::vector<std::uint32_t>{5});
  CHECK(B.successors(5) == std::vector<std::uint32_t>{4});
  CHECK(B.successors(4) == std::vector<std::uint32_t>{3});
  CHECK(B.at(0, 1));
  CHECK_FALSE(B.at(0, 3));
}

TEST_CASE("hashimoto edge cases") {
  CHECK_THROWS_AS(hashimoto_matrix(UndirectedMultigraph(3, {})), std::domain_error);

  // single edge: only continuation would be the backtrack
  EdgeAdjacencyMatrix p2 = hashimoto_matrix(UndirectedMultigraph(2, {{0, 1}}));
  CHECK(p2.dim() == 2);
  CHECK(p2.successors(0).empty());
  CHECK(p2.successors(1).empty());

  // doubled edge, orientations chosen so both forward copies chain
  EdgeAdjacencyMatrix db = hashimoto_matrix(UndirectedMultigraph(2, {{0, 1}, {1, 0}}));
  CHECK(db.at(0, 1));
  for (std::size_t i = 0; i < 4; ++i) CHECK(db.successors(i).size() == 1);
}

TEST_CASE("hashimoto row sums and inverse pairing on random multigraphs") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    RngStream rng(2024, seed);
    std::size_t nv = 2 + rng.below(5);
    std::size_t ne = 1 + rng.below(8);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t k = 0; k < ne; ++k) {
      auto u = static_cast<std::uint32_t>(rng.below(nv));
      auto v = static_cast<std::uint32_t>(rng.below(nv));
      if (u == v) v = (v + 1) % nv;
      edges.emplace_back(u, v);
    }
    UndirectedMultigraph g(nv, edges);
    EdgeAdjacencyMatrix B(g);
    const auto& d = B.directed();
    std::size_t ones = 0;
    for (std::uint32_t e = 0; e < B.dim(); ++e) {
      CHECK(B.successors(e).size() == g.degree(d.head(e)) - 1);
      CHECK_FALSE(B.at(e, d.inverse(e)));
      ones += B.successors(e).size();
    }
    std::size_t expect = 0;
    for (std::uint32_t v = 0; v < nv; ++v) expect += g.degree(v) * (g.degree(v) - 1);
    CHECK(ones == expect);
  }
}

TEST_CASE("m_cover basics") {
  auto g = triangle();

  SUBCASE("1-cover is the identity") {
    CoverGraph c = m_cover(g, 1, {{0}, {0}, {0}});
    CHECK(c.lifted.num_vertices() == 3);
    CHECK(c.lifted.num_edges() == 3);
    CHECK(c.lifted.edges() == g.edges());
  }

  SUBCASE("single edge, identity 2-cover splits") {
    UndirectedMultigraph e(2, {{0, 1}});
    CoverGraph c = m_cover(e, 2, {{0, 1}});
    CHECK(c.lifted.num_vertices() == 4);
    CHECK(c.lifted.num_edges() == 2);
    CHECK(c.lifted.num_components() == 2);
  }

  SUBCASE("one swap glues the triangle lift into a 6-cycle") {
    CoverGraph c = m_cover(g, 2, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(c.lifted.num_vertices() == 6);
    CHECK(c.lifted.num_edges() == 6);
    CHECK(c.lifted.connected());
    for (std::uint32_t v = 0; v < 6; ++v) CHECK(c.lifted.degree(v) == 2);
  }

  SUBCASE("projection and degree invariants") {
    auto perms = random_cover_permutations(g.num_edges(), 3, 99);
    CoverGraph c = m_cover(g, 3, perms);
    CHECK(c.lifted.num_vertices() == 9);
    CHECK(c.lifted.num_edges() == 9);
    std::vector<std::size_t> fiber(g.num_edges(), 0);
    for (std::size_t le = 0; le < c.lifted.num_edges(); ++le) {
      auto [a, b] = c.lifted.edge(le);
      auto [u, v] = g.edge(c.base_edge(le));
      CHECK(c.base_vertex(a) == u);
      CHECK(c.base_vertex(b) == v);
      ++fiber[c.base_edge(le)];
    }
    for (auto f : fiber) CHECK(f == 3);
    for (std::size_t lv = 0; lv < c.lifted.num_vertices(); ++lv)
      CHECK(c.lifted.degree(static_cast<std::uint32_t>(lv)) ==
            g.degree(c.base_vertex(lv)));
  }

  SUBCASE("rejections") {
    CHECK_THROWS_AS(m_cover(g, 2, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(m_cover(g, 2, {{0, 1}, {0, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(m_cover(g, 0, {}), std::invalid_argument);
  }
}

TEST_CASE("spectral radius") {
  Mat<double> zero(2, 2);
  CHECK(spectral_radius(zero) == doctest::Approx(0.0).epsilon(1e-9));

  CHECK(spectral_radius(hashimoto_matrix(triangle()).dense()) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(spectral_radius(hashimoto_matrix(k4()).dense()) == doctest::Approx(2.0).epsilon(1e-8));

  Mat<double> rect(2, 3);
  CHECK_THROWS_AS(spectral_radius(rect), std::invalid_argument);

  Mat<double> diag(3, 3);
  diag(0, 0) = -5;
  diag(1, 1) = 2;
  diag(2, 2) = 1;
  CHECK(spectral_radius(diag) == doctest::Approx(5.0).epsilon(1e-8));
}
