#include <doctest.h>

#include "zetacode/graph.hpp"
#include "zetacode/rng.hpp"
#include "zetacode/series.hpp"
#include "zetacode/zeta.hpp"

using namespace zetacode;

namespace {

UndirectedMultigraph triangle() { return {3, {{0, 1}, {1, 2}, {2, 0}}}; }
UndirectedMultigraph doubled_edge() { return {2, {{0, 1}, {0, 1}}}; }
UndirectedMultigraph square() { return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}; }
UndirectedMultigraph k4() {
  return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

UndirectedMultigraph random_multigraph(std::uint64_t seed, std::size_t max_edges = 9,
                                       std::size_t max_degree = 4) {
  RngStream rng(0xC0FFEE, seed);
  for (;;) {
    std::size_t nv = 3 + rng.below(5);  // 3..7 vertices
    std::size_t ne = 2 + rng.below(max_edges - 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::size_t> deg(nv, 0);
    for (std::size_t k = 0; k < ne; ++k) {
      auto u = static_cast<std::uint32_t>(rng.below(nv));
      auto v = static_cast<std::uint32_t>(rng.below(nv));
      if (u == v) v = (v + 1) % static_cast<std::uint32_t>(nv);
      if (deg[u] >= max_degree || deg[v] >= max_degree) continue;
      ++deg[u];
      ++deg[v];
      edges.emplace_back(u, v);
    }
    if (edges.size() >= 2) return {nv, edges};
  }
}

}  // namespace

TEST_CASE("prime cycles of the triangle") {
  auto classes = prime_cycles(triangle(), 12);
  REQUIRE(classes.size() == 2);  // the two orientations, nothing else up to 12
  CHECK(classes[0].edges == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(classes[1].edges == std::vector<std::uint32_t>{3, 5, 4});
  auto counts = prime_cycle_length_counts(classes, 12);
  CHECK(counts[3] == 2);
  for (std::size_t m : {2, 4, 5, 6, 7, 8, 9, 10, 11, 12}) CHECK(counts[m] == 0);
}

TEST_CASE("prime cycles of the doubled edge") {
  auto classes = prime_cycles(doubled_edge(), 8);
  auto counts = prime_cycle_length_counts(classes, 8);
  CHECK(counts[2] == 2);  // both orientations of the 2-cycle
  CHECK(counts[4] == 0);  // the square of a 2-cycle is not primitive
  CHECK(counts[6] == 0);
  CHECK(counts[8] == 0);
  CHECK(classes.size() == 2);
}

TEST_CASE("prime cycles of the square") {
  auto counts = prime_cycle_length_counts(prime_cycles(square(), 12), 12);
  CHECK(counts[4] == 2);
  for (std::size_t m : {2, 3, 5, 6, 7, 8, 9, 10, 11, 12}) CHECK(counts[m] == 0);
}

TEST_CASE("prime cycle preconditions and degenerate graphs") {
  CHECK_THROWS_AS(prime_cycles(triangle(), 1), std::invalid_argument);
  CHECK(prime_cycles(UndirectedMultigraph(3, {{0, 1}, {1, 2}}), 10).empty());
  CHECK(prime_cycles(UndirectedMultigraph(2, {}), 5).empty());
}

TEST_CASE("tailless condition excludes figure-eight revisits only when backtracking") {
  // bowtie: two triangles sharing vertex 2 (valid prime cycles pass straight through)
  UndirectedMultigraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  auto counts = prime_cycle_length_counts(prime_cycles(bowtie, 6), 6);
  CHECK(counts[3] == 4);  // two triangles, two orientations each
  CHECK(counts[6] == 4);  // figure-eights through the cut vertex, 2x2 orientations
}

TEST_CASE("closed walk counts match the prime cycle census") {
  for (auto g : {triangle(), doubled_edge(), square(), k4()}) {
    auto walks = closed_walk_counts(g, 12);
    auto from_primes = closed_walk_counts_from_primes(prime_cycles(g, 12), 12);
    CHECK(walks == from_primes);
  }
  CHECK(closed_walk_counts(triangle(), 3) == std::vector<mpz_class>{0, 0, 6});
  CHECK(closed_walk_counts(doubled_edge(), 4) == std::vector<mpz_class>{0, 4, 0, 4});
}

TEST_CASE("univariate determinant route: triangle and friends") {
  // (1 - u^3)^2 = 1 - 2u^3 + u^6
  UniPoly tri = edge_zeta_inverse_det_univariate(triangle(), 6);
  CHECK(tri == UniPoly({1, 0, 0, -2, 0, 0, 1}));

  // doubled edge: (1 - u^2)^2
  UniPoly db = edge_zeta_inverse_det_univariate(doubled_edge(), 4);
  CHECK(db == UniPoly({1, 0, -2, 0, 1}));

  // trees have trivial zeta
  UniPoly path = edge_zeta_inverse_det_univariate(UndirectedMultigraph(3, {{0, 1}, {1, 2}}), 8);
  CHECK(path == UniPoly::constant(1));
}

TEST_CASE("multivariate determinant route: triangle fixture") {
  auto g = triangle();
  MultiPoly f = edge_zeta_inverse_det(g, per_edge_variables(3), 12);
  // (1 - u1 u2 u3)^2 = 1 - 2 u1u2u3 + (u1u2u3)^2
  CHECK(f.coeff({0, 0, 0}) == 1);
  CHECK(f.coeff({1, 1, 1}) == -2);
  CHECK(f.coeff({2, 2, 2}) == 1);
  CHECK(f.terms().size() == 3);

  MultiPoly oracle = zeta_inverse_from_primes(prime_cycles(g, 12), per_edge_variables(3), 12);
  CHECK(f == oracle);
}

TEST_CASE("multivariate equals prime product on fixtures and random graphs") {
  std::vector<UndirectedMultigraph> suite = {triangle(), doubled_edge(), square()};
  for (std::uint64_t s = 0; s < 6; ++s) suite.push_back(random_multigraph(1000 + s, 6));
  for (const auto& g : suite) {
    if (g.num_edges() > 6) continue;
    std::uint32_t D = 10;
    auto vm = per_edge_variables(g.num_edges());
    MultiPoly det = edge_zeta_inverse_det(g, vm, D);
    MultiPoly oracle = zeta_inverse_from_primes(prime_cycles(g, D), vm, D);
    CHECK(det == oracle);
    CHECK(det.integer_coefficients());
  }
}

TEST_CASE("univariate equals prime product on random multigraphs") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto g = random_multigraph(2000 + s);
    std::uint32_t D = 12;
    UniPoly det = edge_zeta_inverse_det_univariate(g, D);
    MultiPoly oracle = zeta_inverse_from_primes(prime_cycles(g, D), single_variable(g.num_edges()), D);
    for (std::uint32_t k = 0; k <= D; ++k) CHECK(mpq_class(det.coeff(k)) == oracle.coeff({k}));
  }
}

TEST_CASE("bass identity route") {
  SUBCASE("triangle") {
    CHECK(ihara_zeta_inverse_bass(triangle()) == UniPoly({1, 0, 0, -2, 0, 0, 1}));
  }
  SUBCASE("doubled edge") {
    CHECK(ihara_zeta_inverse_bass(doubled_edge()) == UniPoly({1, 0, -2, 0, 1}));
  }
  SUBCASE("trees and forests give 1") {
    CHECK(ihara_zeta_inverse_bass(UndirectedMultigraph(4, {{0, 1}, {1, 2}, {2, 3}})) ==
          UniPoly::constant(1));
    CHECK(ihara_zeta_inverse_bass(UndirectedMultigraph(3, {})) == UniPoly::constant(1));
  }
  SUBCASE("matches the full determinant polynomial on the suite") {
    std::vector<UndirectedMultigraph> suite = {triangle(), doubled_edge(), square(), k4()};
    for (std::uint64_t s = 0; s < 10; ++s) suite.push_back(random_multigraph(3000 + s));
    for (const auto& g : suite) {
      UniPoly bass = ihara_zeta_inverse_bass(g);
      UniPoly det = edge_zeta_inverse_det_univariate(g, static_cast<std::uint32_t>(2 * g.num_edges()));
      CHECK(bass == det);
    }
  }
  SUBCASE("disconnected graph multiplies component factors") {
    // triangle plus separate doubled edge
    UndirectedMultigraph g(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {3, 4}});
    UniPoly expect = UniPoly({1, 0, 0, -2, 0, 0, 1}) * UniPoly({1, 0, -2, 0, 1});
    CHECK(ihara_zeta_inverse_bass(g) == expect);
  }
}

TEST_CASE("log derivative identity ties zeta to walk counts") {
  // u Z'(u)/Z(u) = sum_m N_m u^m, with Z = 1/bass (an independent route)
  for (auto g : {triangle(), square(), k4(), random_multigraph(41)}) {
    std::size_t D = 10;
    UniPoly zinv = ihara_zeta_inverse_bass(g);
    QSeries z = series_recip(series_from_unipoly(zinv, D));
    // u Z' / Z
    QSeries uzp(D + 1);
    for (std::size_t k = 1; k <= D; ++k) uzp[k] = z[k] * static_cast<unsigned long>(k);
    QSeries ratio = series_mul(uzp, series_recip(z));
    auto walks = closed_walk_counts(g, D);
    for (std::size_t m = 1; m <= D; ++m) CHECK(ratio[m] == mpq_class(walks[m - 1]));
  }
}

TEST_CASE("grouped variable maps") {
  auto vm = grouped_variables({0, 1, 0});
  CHECK(vm.num_vars == 2);
  CHECK_THROWS_AS(grouped_variables({0, 2}), std::invalid_argument);

  // triangle with edges 0 and 2 sharing a variable
  MultiPoly f = edge_zeta_inverse_det(triangle(), vm, 6);
  CHECK(f.coeff({2, 1}) == -2);
  CHECK(f.coeff({4, 2}) == 1);
}
