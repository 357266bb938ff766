#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zetacode/ensemble.hpp"
#include "zetacode/graph.hpp"

namespace zetacode {

// Unordered triangle count via Tr(A^3)/6. Rejects multigraphs.
std::uint64_t count_triangles(const UndirectedMultigraph& g);
// Unordered 4-cycle count via (Tr(A^4) - 2*sum(deg^2) + 2|E|)/8; the formula
// is gated behind exhaustive-enumeration tests. Rejects multigraphs.
std::uint64_t count_4cycles(const UndirectedMultigraph& g);

// exhaustive oracles, for tests and small graphs
std::uint64_t count_triangles_exhaustive(const UndirectedMultigraph& g);
std::uint64_t count_4cycles_exhaustive(const UndirectedMultigraph& g);

enum class CycleStatistic { triangles, four_cycles };

std::string statistic_name(CycleStatistic s);

struct TailEstimate {
  std::size_t N = 0;
  double p = 0.0;
  CycleStatistic statistic = CycleStatistic::triangles;
  double t = 0.0;
  double threshold = 0.0;  // N^3 t for triangles, N^4 t for 4-cycles
  std::size_t hits = 0;
  std::size_t samples = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0, ci_hi = 0.0;  // Wilson 95%
  bool below_resolution = false;    // zero hits: p_hat below 1/S
  double phi_hat = 0.0;             // -log(p_hat)/N^2; lower bound log(S)/N^2 when below resolution
};

// Per-sample statistic values, deterministic in (spec.seed, index).
std::vector<std::uint64_t> sample_statistics(const EnsembleSpec& spec, CycleStatistic stat,
                                             std::size_t S, unsigned threads = 1);

// P(statistic >= N^3 t) (or N^4 t). spec must be erdos_renyi with S >= 100.
TailEstimate tail_probability(const EnsembleSpec& spec, CycleStatistic stat, double t,
                              std::size_t S, unsigned threads = 1);

// Same samples reused across the whole grid, so p_hat is monotone in t.
std::vector<TailEstimate> tail_curve(const EnsembleSpec& spec, CycleStatistic stat,
                                     const std::vector<double>& ts, std::size_t S,
                                     unsigned threads = 1);

struct ScalingProbe {
  std::vector<TailEstimate> per_n;
  double phi_min = 0.0, phi_max = 0.0;
  double spread = 0.0;  // phi_max / phi_min when both positive
  bool any_below_resolution = false;
};

// phi_hat(N) for each N at fixed (p, t); per-N ensembles get decorrelated
// seeds seed + N.
ScalingProbe rate_scaling_probe(double p, double t, const std::vector<std::size_t>& n_list,
                                std::size_t S, CycleStatistic stat, std::uint64_t seed,
                                unsigned threads = 1);

struct LegendreRate {
  double x = 0.0;
  double value = 0.0;
  double t_star = 0.0;
  bool boundary = false;  // maximizer pinned at t_max: widen the range
};

// max over t in [0, t_max] of t*x - log_mgf(t), golden-section to 1e-9 in t.
LegendreRate legendre_rate(const std::function<double(double)>& log_mgf, double x,
                           double t_max);

struct GartnerEllisEstimate {
  double t = 0.0;
  std::vector<std::pair<std::size_t, double>> per_n;  // (n, log m_n(t) / n)
  double lambda_hat = 0.0;        // Richardson-extrapolated limit
  double diagnostic = 0.0;        // |last extrapolant - previous|
  bool non_monotone = false;      // oscillating with growing steps
};

// Needs an increasing n_list of length >= 3.
GartnerEllisEstimate gartner_ellis_lambda(
    const std::function<double(std::size_t, double)>& log_mgf_n, double t,
    const std::vector<std::size_t>& n_list);

// log((1/S) sum exp(t x_i)) with max-shift for overflow safety
double log_mean_exp(const std::vector<double>& xs, double t);

}  // namespace zetacode
