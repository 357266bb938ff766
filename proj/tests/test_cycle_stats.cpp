#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zetacode/cycle_stats.hpp"
#include "zetacode/ensemble.hpp"
#include "zetacode/graph.hpp"
#include "zetacode/rng.hpp"

using namespace zetacode;

namespace {

UndirectedMultigraph complete_graph(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return UndirectedMultigraph(n, std::move(edges));
}

UndirectedMultigraph petersen() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return UndirectedMultigraph(10, std::move(edges));
}

UndirectedMultigraph graph_from_mask(std::uint32_t n, std::uint32_t mask) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t bit = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j, ++bit)
      if (mask & (1u << bit)) edges.emplace_back(i, j);
  return UndirectedMultigraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("cycle count fixtures") {
  CHECK(count_triangles(complete_graph(3)) == 1);
  CHECK(count_4cycles(complete_graph(3)) == 0);
  CHECK(count_triangles(complete_graph(4)) == 4);
  CHECK(count_4cycles(complete_graph(4)) == 3);
  CHECK(count_triangles(complete_graph(5)) == 10);
  CHECK(count_4cycles(complete_graph(5)) == 15);
  CHECK(count_triangles(complete_graph(8)) == 56);
  CHECK(count_4cycles(complete_graph(8)) == 210);

  UndirectedMultigraph square(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(count_triangles(square) == 0);
  CHECK(count_4cycles(square) == 1);

  UndirectedMultigraph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(count_triangles(k23) == 0);
  CHECK(count_4cycles(k23) == 3);

  CHECK(count_triangles(petersen()) == 0);  // girth 5
  CHECK(count_4cycles(petersen()) == 0);

  UndirectedMultigraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(count_triangles(star) == 0);
  CHECK(count_4cycles(star) == 0);

  UndirectedMultigraph empty(6, {});
  CHECK(count_triangles(empty) == 0);
  CHECK(count_4cycles(empty) == 0);

  UndirectedMultigraph doubled(2, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(count_triangles(doubled), std::invalid_argument);
  CHECK_THROWS_AS(count_4cycles(doubled), std::invalid_argument);
  CHECK_THROWS_AS(count_triangles_exhaustive(doubled), std::invalid_argument);
  CHECK_THROWS_AS(count_4cycles_exhaustive(doubled), std::invalid_argument);
}

TEST_CASE("trace formulas match exhaustive enumeration") {
  SUBCASE("every graph on five vertices") {
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
      auto g = graph_from_mask(5, mask);
      CAPTURE(mask);
      CHECK(count_triangles(g) == count_triangles_exhaustive(g));
      CHECK(count_4cycles(g) == count_4cycles_exhaustive(g));
    }
  }

  SUBCASE("random graphs up to ten vertices") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      RngStream rng(0xABCD, seed);
      std::size_t N = 6 + rng.below(5);
      double p = 0.2 + 0.2 * (seed % 4);
      auto g = sample_graph(EnsembleSpec::erdos_renyi(N, p, seed), 0);
      CAPTURE(seed);
      CHECK(count_triangles(g) == count_triangles_exhaustive(g));
      CHECK(count_4cycles(g) == count_4cycles_exhaustive(g));
    }
  }
}

TEST_CASE("statistic sampling") {
  CHECK(statistic_name(CycleStatistic::triangles) == "triangles");
  CHECK(statistic_name(CycleStatistic::four_cycles) == "four_cycles");

  SUBCASE("values are deterministic per index and thread-count invariant") {
    auto spec = EnsembleSpec::erdos_renyi(7, 0.5, 123);
    auto a = sample_statistics(spec, CycleStatistic::triangles, 300, 1);
    auto b = sample_statistics(spec, CycleStatistic::triangles, 300, 3);
    CHECK(a == b);
    for (std::size_t s = 0; s < 10; ++s)
      CHECK(a[s] == count_triangles(sample_graph(spec, s)));
  }

  SUBCASE("degenerate p = 1 pins every sample") {
    auto spec = EnsembleSpec::erdos_renyi(8, 1.0, 9);
    auto vals = sample_statistics(spec, CycleStatistic::triangles, 40);
    for (auto v : vals) CHECK(v == 56);
  }
}

TEST_CASE("tail probability estimates") {
  SUBCASE("validation") {
    auto pm = EnsembleSpec::point_mass(complete_graph(4), 0);
    CHECK_THROWS_AS(tail_probability(pm, CycleStatistic::triangles, 0.1, 200),
                    std::invalid_argument);
    auto er = EnsembleSpec::erdos_renyi(6, 0.5, 1);
    CHECK_THROWS_AS(tail_probability(er, CycleStatistic::triangles, 0.1, 99),
                    std::invalid_argument);
  }

  SUBCASE("sure events give p_hat 1 and rate 0") {
    auto spec = EnsembleSpec::erdos_renyi(8, 1.0, 4);
    auto est = tail_probability(spec, CycleStatistic::triangles, 0.1, 100);
    CHECK(est.threshold == doctest::Approx(51.2));
    CHECK(est.hits == 100);
    CHECK(est.p_hat == 1.0);
    CHECK(est.phi_hat == 0.0);
    CHECK_FALSE(est.below_resolution);
    CHECK(est.ci_hi == 1.0);
    // Wilson lower bound at p_hat = 1 collapses to 1/(1 + z^2/S)
    const double z = 1.959963984540054;
    CHECK(est.ci_lo == doctest::Approx(1.0 / (1.0 + z * z / 100.0)).epsilon(1e-12));

    auto zero = tail_probability(spec, CycleStatistic::triangles, 0.0, 100);
    CHECK(zero.p_hat == 1.0);
    CHECK(zero.phi_hat == 0.0);
  }

  SUBCASE("impossible events report the resolution floor") {
    auto spec = EnsembleSpec::erdos_renyi(8, 1.0, 4);
    auto est = tail_probability(spec, CycleStatistic::triangles, 1.0, 100);
    CHECK(est.hits == 0);
    CHECK(est.below_resolution);
    CHECK(est.p_hat == 0.0);
    CHECK(est.ci_lo <= 1e-12);  // exactly 0 up to rounding in the Wilson sqrt
    CHECK(est.phi_hat == doctest::Approx(std::log(100.0) / 64.0).epsilon(1e-12));
  }

  SUBCASE("monte carlo matches the exact distribution on ER(6, 1/2)") {
    // at p = 1/2 all 2^15 graphs are equally likely
    const double threshold = 5.0;
    std::size_t favorable = 0;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask)
      if (count_triangles_exhaustive(graph_from_mask(6, mask)) >= threshold) ++favorable;
    double exact = static_cast<double>(favorable) / (1u << 15);

    auto spec = EnsembleSpec::erdos_renyi(6, 0.5, 2718);
    auto est = tail_probability(spec, CycleStatistic::triangles, 5.0 / 216.0, 2000);
    CHECK(est.threshold == doctest::Approx(5.0));
    double sigma = std::sqrt(exact * (1.0 - exact) / 2000.0);
    CHECK(std::abs(est.p_hat - exact) < 4.0 * sigma);
    CHECK(est.ci_lo <= est.p_hat);
    CHECK(est.p_hat <= est.ci_hi);
    CHECK(est.phi_hat == doctest::Approx(-std::log(est.p_hat) / 36.0).epsilon(1e-12));
  }

  SUBCASE("curves share samples, so hits are monotone in t") {
    auto spec = EnsembleSpec::erdos_renyi(12, 0.3, 55);
    std::vector<double> ts = {0.0, 0.002, 0.004, 0.008, 0.016};
    auto curve = tail_curve(spec, CycleStatistic::triangles, ts, 400);
    REQUIRE(curve.size() == ts.size());
    for (std::size_t i = 1; i < curve.size(); ++i) {
      CHECK(curve[i].hits <= curve[i - 1].hits);
      CHECK(curve[i].p_hat <= curve[i - 1].p_hat);
      if (curve[i].hits > 0) CHECK(curve[i].phi_hat >= curve[i - 1].phi_hat);
    }
    CHECK(curve[0].p_hat == 1.0);
  }
}

TEST_CASE("rate scaling probe") {
  SUBCASE("sure events give zero rates and undefined spread") {
    auto probe = rate_scaling_probe(1.0, 0.05, {4, 6, 8}, 100, CycleStatistic::triangles, 7);
    REQUIRE(probe.per_n.size() == 3);
    CHECK(probe.per_n[0].N == 4);
    CHECK(probe.per_n[2].N == 8);
    CHECK(probe.phi_min == 0.0);
    CHECK(probe.phi_max == 0.0);
    CHECK(std::isinf(probe.spread));
    CHECK_FALSE(probe.any_below_resolution);
  }

  SUBCASE("resolution floors scale as log(S)/N^2") {
    auto probe = rate_scaling_probe(1.0, 1.0, {4, 8}, 100, CycleStatistic::triangles, 7);
    CHECK(probe.any_below_resolution);
    CHECK(probe.spread == doctest::Approx(4.0).epsilon(1e-12));
  }
}

TEST_CASE("legendre transform of the log mgf") {
  SUBCASE("bernoulli rate function") {
    auto log_mgf = [](double t) { return std::log(0.7 + 0.3 * std::exp(t)); };
    auto r = legendre_rate(log_mgf, 0.5, 5.0);
    CHECK(std::abs(r.value - 0.0871766935723889) <= 1e-9);
    CHECK(r.t_star == doctest::Approx(std::log(7.0 / 3.0)).epsilon(1e-6));
    CHECK_FALSE(r.boundary);
  }

  SUBCASE("gaussian rate function") {
    auto log_mgf = [](double t) { return 0.5 * t * t; };
    auto r = legendre_rate(log_mgf, 1.0, 4.0);
    CHECK(std::abs(r.value - 0.5) <= 1e-9);
    CHECK(r.t_star == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_FALSE(r.boundary);
  }

  SUBCASE("the rate vanishes at the mean") {
    auto log_mgf = [](double t) { return std::log(0.7 + 0.3 * std::exp(t)); };
    auto r = legendre_rate(log_mgf, 0.3, 5.0);
    CHECK(r.value == 0.0);
    CHECK(r.t_star == 0.0);
  }

  SUBCASE("maximizer pinned at t_max raises the boundary flag") {
    auto log_mgf = [](double t) { return 0.5 * t * t; };
    auto r = legendre_rate(log_mgf, 10.0, 2.0);
    CHECK(r.boundary);
    CHECK(r.t_star == doctest::Approx(2.0));
    CHECK(r.value == doctest::Approx(18.0).epsilon(1e-9));
  }

  SUBCASE("validation") {
    auto log_mgf = [](double t) { return 0.5 * t * t; };
    CHECK_THROWS_AS(legendre_rate(log_mgf, 1.0, 0.0), std::invalid_argument);
  }
}

TEST_CASE("gartner-ellis extrapolation") {
  SUBCASE("exactly linear log mgf is recovered with zero diagnostic") {
    auto exact = [](std::size_t n, double t) { return static_cast<double>(n) * 0.5 * t * t; };
    auto est = gartner_ellis_lambda(exact, 0.5, {10, 20, 40});
    CHECK(est.lambda_hat == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(est.diagnostic <= 1e-14);
    CHECK_FALSE(est.non_monotone);
    REQUIRE(est.per_n.size() == 3);
    CHECK(est.per_n[0].second == doctest::Approx(0.125));
  }

  SUBCASE("an additive constant is cancelled exactly") {
    auto with_const = [](std::size_t n, double t) {
      return static_cast<double>(n) * 0.5 * t * t + 3.0;
    };
    auto est = gartner_ellis_lambda(with_const, 0.5, {10, 20, 40, 80});
    CHECK(est.lambda_hat == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(est.diagnostic <= 1e-12);
  }

  SUBCASE("a log n correction leaves a visible diagnostic") {
    auto with_log = [](std::size_t n, double t) {
      return static_cast<double>(n) * 0.5 * t * t + std::log(static_cast<double>(n));
    };
    auto est = gartner_ellis_lambda(with_log, 0.5, {50, 100, 200, 400});
    CHECK(std::abs(est.lambda_hat - 0.125) < 0.004);
    CHECK(est.diagnostic > 1e-4);
  }

  SUBCASE("oscillation with growing steps is flagged") {
    auto wild = [](std::size_t n, double t) {
      double sign = (n % 2 == 0) ? 1.0 : -1.0;
      double amp = 0.01 * std::pow(2.0, static_cast<double>(n) - 10.0);
      return static_cast<double>(n) * (0.5 * t * t + sign * amp);
    };
    auto est = gartner_ellis_lambda(wild, 0.5, {10, 11, 12, 13});
    CHECK(est.non_monotone);
  }

  SUBCASE("pipeline consistency with the legendre transform") {
    // for iid Bernoulli sums the scaled cumulant limit is exact at every n,
    // so the chained estimate reproduces the analytic rate
    auto mgf_n = [](std::size_t n, double t) {
      return static_cast<double>(n) * std::log(0.7 + 0.3 * std::exp(t));
    };
    std::vector<std::size_t> ns = {10, 20, 40};
    auto lambda = [&](double t) { return gartner_ellis_lambda(mgf_n, t, ns).lambda_hat; };
    auto r = legendre_rate(lambda, 0.5, 5.0);
    CHECK(std::abs(r.value - 0.0871766935723889) <= 1e-9);
  }

  SUBCASE("validation") {
    auto exact = [](std::size_t n, double t) { return static_cast<double>(n) * t; };
    CHECK_THROWS_AS(gartner_ellis_lambda(exact, 1.0, {10, 20}), std::invalid_argument);
    CHECK_THROWS_AS(gartner_ellis_lambda(exact, 1.0, {10, 20, 20}), std::invalid_argument);
    CHECK_THROWS_AS(gartner_ellis_lambda(exact, 1.0, {10, 20, 15}), std::invalid_argument);
  }
}

TEST_CASE("log mean exp") {
  CHECK(log_mean_exp({5.0}, 2.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(log_mean_exp({0.0, 0.0, 0.0}, 3.0) == 0.0);
  CHECK(log_mean_exp({0.0, 1.0}, 1.0) == doctest::Approx(0.6201145069582667).epsilon(1e-12));
  CHECK(log_mean_exp({1000.0, 1000.0}, 1.0) == 1000.0);
  CHECK(log_mean_exp({1000.0, 0.0}, 1.0) ==
        doctest::Approx(1000.0 - 0.6931471805599453).epsilon(1e-12));
  CHECK_THROWS_AS(log_mean_exp({}, 1.0), std::invalid_argument);

  // agrees with the direct formula when no shift is needed
  std::vector<double> xs = {0.1, -0.4, 0.9, 0.3};
  double direct = 0.0;
  for (double x : xs) direct += std::exp(0.7 * x);
  direct = std::log(direct / 4.0);
  CHECK(log_mean_exp(xs, 0.7) == doctest::Approx(direct).epsilon(1e-14));
}
