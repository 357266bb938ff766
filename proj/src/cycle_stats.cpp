#include "zetacode/cycle_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "zetacode/parallel.hpp"

namespace zetacode {

namespace {

std::vector<std::vector<std::uint8_t>> simple_adjacency(const UndirectedMultigraph& g,
                                                        const char* op) {
  if (!g.is_simple())
    throw std::invalid_argument(std::string(op) + " needs a simple graph (no parallel edges)");
  std::vector<std::vector<std::uint8_t>> a(g.num_vertices(),
                                           std::vector<std::uint8_t>(g.num_vertices(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

}  // namespace

std::uint64_t count_triangles(const UndirectedMultigraph& g) {
  auto a = simple_adjacency(g, "triangle census");
  std::size_t n = g.num_vertices();
  // Tr(A^3) = sum over i,j of (A^2)_{ij} A_{ji}
  std::uint64_t tr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[j][i]) continue;
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += a[i][k] & a[k][j] ? 1 : 0;
      tr += acc;
    }
  }
  return tr / 6;
}

std::uint64_t count_4cycles(const UndirectedMultigraph& g) {
  auto a = simple_adjacency(g, "4-cycle census");
  std::size_t n = g.num_vertices();
  // Tr(A^4) = sum_{i,j} (A^2)_{ij}^2
  std::uint64_t tr4 = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t c = 0;
      for (std::size_t k = 0; k < n; ++k) c += a[i][k] & a[k][j] ? 1 : 0;
      tr4 += c * c;
    }
  std::uint64_t deg2 = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::uint64_t d = g.degree(static_cast<std::uint32_t>(v));
    deg2 += d * d;
  }
  return (tr4 - 2 * deg2 + 2 * g.num_edges()) / 8;
}

std::uint64_t count_triangles_exhaustive(const UndirectedMultigraph& g) {
  auto a = simple_adjacency(g, "triangle census");
  std::size_t n = g.num_vertices();
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (a[i][j] && a[j][k] && a[i][k]) ++c;
  return c;
}

std::uint64_t count_4cycles_exhaustive(const UndirectedMultigraph& g) {
  auto a = simple_adjacency(g, "4-cycle census");
  std::size_t n = g.num_vertices();
  std::uint64_t c = 0;
  // over each 4-subset, the three pairings into a cyclic order
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          if (a[i][j] && a[j][k] && a[k][l] && a[l][i]) ++c;  // i-j-k-l
          if (a[i][k] && a[k][j] && a[j][l] && a[l][i]) ++c;  // i-k-j-l
          if (a[i][j] && a[j][l] && a[l][k] && a[k][i]) ++c;  // i-j-l-k
        }
  return c;
}

std::string statistic_name(CycleStatistic s) {
  return s == CycleStatistic::triangles ? "triangles" : "four_cycles";
}

std::vector<std::uint64_t> sample_statistics(const EnsembleSpec& spec, CycleStatistic stat,
                                             std::size_t S, unsigned threads) {
  auto chunks = run_chunked<std::vector<std::uint64_t>>(
      S, threads, [&](std::size_t, std::size_t b, std::size_t e) {
        std::vector<std::uint64_t> vals;
        vals.reserve(e - b);
        for (std::size_t s = b; s < e; ++s) {
          UndirectedMultigraph g = sample_graph(spec, s);
          vals.push_back(stat == CycleStatistic::triangles ? count_triangles(g)
                                                           : count_4cycles(g));
        }
        return vals;
      });
  std::vector<std::uint64_t> out;
  out.reserve(S);
  for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
  return out;
}

namespace {

constexpr double kWilsonZ = 1.959963984540054;  // 95%

TailEstimate estimate_from_counts(const EnsembleSpec& spec, CycleStatistic stat, double t,
                                  const std::vector<std::uint64_t>& values) {
  TailEstimate r;
  r.N = spec.N;
  r.p = spec.p;
  r.statistic = stat;
  r.t = t;
  double scale = stat == CycleStatistic::triangles
                     ? static_cast<double>(spec.N) * spec.N * spec.N
                     : static_cast<double>(spec.N) * spec.N * spec.N * spec.N;
  r.threshold = scale * t;
  r.samples = values.size();
  for (auto v : values)
    if (static_cast<double>(v) >= r.threshold) ++r.hits;
  double S = static_cast<double>(r.samples);
  double ph = static_cast<double>(r.hits) / S;
  r.p_hat = ph;
  double z = kWilsonZ;
  double denom = 1.0 + z * z / S;
  double center = (ph + z * z / (2.0 * S)) / denom;
  double half = z * std::sqrt(ph * (1.0 - ph) / S + z * z / (4.0 * S * S)) / denom;
  r.ci_lo = std::max(0.0, center - half);
  r.ci_hi = std::min(1.0, center + half);
  double n2 = static_cast<double>(spec.N) * spec.N;
  if (r.hits == 0) {
    r.below_resolution = true;
    r.phi_hat = std::log(S) / n2;  // lower bound from p_hat < 1/S
  } else {
    r.phi_hat = -std::log(ph) / n2;
  }
  return r;
}

}  // namespace

TailEstimate tail_probability(const EnsembleSpec& spec, CycleStatistic stat, double t,
                              std::size_t S, unsigned threads) {
  return tail_curve(spec, stat, {t}, S, threads)[0];
}

std::vector<TailEstimate> tail_curve(const EnsembleSpec& spec, CycleStatistic stat,
                                     const std::vector<double>& ts, std::size_t S,
                                     unsigned threads) {
  if (spec.kind != EnsembleKind::erdos_renyi)
    throw std::invalid_argument("tail probabilities are defined for erdos_renyi ensembles");
  if (S < 100) throw std::invalid_argument("tail estimation needs S >= 100");
  auto values = sample_statistics(spec, stat, S, threads);
  std::vector<TailEstimate> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(estimate_from_counts(spec, stat, t, values));
  return out;
}

ScalingProbe rate_scaling_probe(double p, double t, const std::vector<std::size_t>& n_list,
                                std::size_t S, CycleStatistic stat, std::uint64_t seed,
                                unsigned threads) {
  ScalingProbe probe;
  for (std::size_t N : n_list) {
    EnsembleSpec spec = EnsembleSpec::erdos_renyi(N, p, seed + N);
    probe.per_n.push_back(tail_probability(spec, stat, t, S, threads));
  }
  bool first = true;
  for (const auto& est : probe.per_n) {
    if (est.below_resolution) probe.any_below_resolution = true;
    if (first) {
      probe.phi_min = probe.phi_max = est.phi_hat;
      first = false;
    } else {
      probe.phi_min = std::min(probe.phi_min, est.phi_hat);
      probe.phi_max = std::max(probe.phi_max, est.phi_hat);
    }
  }
  probe.spread = probe.phi_min > 0.0 ? probe.phi_max / probe.phi_min
                                     : std::numeric_limits<double>::infinity();
  return probe;
}

LegendreRate legendre_rate(const std::function<double(double)>& log_mgf, double x,
                           double t_max) {
  if (!(t_max > 0.0)) throw std::invalid_argument("legendre_rate needs t_max > 0");
  auto f = [&](double t) { return t * x - log_mgf(t); };
  constexpr double inv_phi = 0.6180339887498948482;
  double a = 0.0, b = t_max;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c), fd = f(d);
  while (b - a > 1e-9) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
  }
  double t_star = 0.5 * (a + b);
  double best = f(t_star);
  LegendreRate r;
  r.x = x;
  r.t_star = t_star;
  r.value = best;
  // endpoints participate: the true maximum can sit on the boundary
  double f0 = f(0.0);
  double fmax = f(t_max);
  if (f0 >= best) {
    r.value = f0;
    r.t_star = 0.0;
  }
  if (fmax > r.value) {
    r.value = fmax;
    r.t_star = t_max;
  }
  r.boundary = t_max - r.t_star <= 1e-6 * t_max;
  return r;
}

GartnerEllisEstimate gartner_ellis_lambda(
    const std::function<double(std::size_t, double)>& log_mgf_n, double t,
    const std::vector<std::size_t>& n_list) {
  if (n_list.size() < 3)
    throw std::invalid_argument("gartner_ellis_lambda needs at least three n values");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("n_list must be strictly increasing");
  GartnerEllisEstimate est;
  est.t = t;
  for (std::size_t n : n_list)
    est.per_n.emplace_back(n, log_mgf_n(n, t) / static_cast<double>(n));
  // e_i = (n_{i+1} v_{i+1} - n_i v_i) / (n_{i+1} - n_i) cancels a c/n correction
  std::vector<double> extr;
  for (std::size_t i = 0; i + 1 < est.per_n.size(); ++i) {
    auto [n0, v0] = est.per_n[i];
    auto [n1, v1] = est.per_n[i + 1];
    extr.push_back((static_cast<double>(n1) * v1 - static_cast<double>(n0) * v0) /
                   static_cast<double>(n1 - n0));
  }
  est.lambda_hat = extr.back();
  est.diagnostic = std::abs(extr.back() - extr[extr.size() - 2]);
  for (std::size_t i = 0; i + 2 < est.per_n.size(); ++i) {
    double d0 = est.per_n[i + 1].second - est.per_n[i].second;
    double d1 = est.per_n[i + 2].second - est.per_n[i + 1].second;
    if (d0 * d1 < 0.0 && std::abs(d1) > std::abs(d0)) est.non_monotone = true;
  }
  return est;
}

double log_mean_exp(const std::vector<double>& xs, double t) {
  if (xs.empty()) throw std::invalid_argument("log_mean_exp of an empty sample");
  double shift = t * xs[0];
  for (double x : xs) shift = std::max(shift, t * x);
  double acc = 0.0;
  for (double x : xs) acc += std::exp(t * x - shift);
  return shift + std::log(acc / static_cast<double>(xs.size()));
}

}  // namespace zetacode
