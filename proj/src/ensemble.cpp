#include "zetacode/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zetacode/parallel.hpp"
#include "zetacode/rng.hpp"
#include "zetacode/zeta.hpp"

namespace zetacode {

EnsembleSpec EnsembleSpec::point_mass(UndirectedMultigraph g, std::uint64_t seed) {
  EnsembleSpec s;
  s.kind = EnsembleKind::point_mass;
  s.graph = std::move(g);
  s.seed = seed;
  return s;
}

EnsembleSpec EnsembleSpec::erdos_renyi(std::size_t N, double p, std::uint64_t seed) {
  EnsembleSpec s;
  s.kind = EnsembleKind::erdos_renyi;
  s.N = N;
  s.p = p;
  s.seed = seed;
  s.validate();
  return s;
}

EnsembleSpec EnsembleSpec::bipartite_config(std::size_t num_bits, std::size_t num_checks,
                                            std::size_t bit_degree, std::uint64_t seed) {
  EnsembleSpec s;
  s.kind = EnsembleKind::bipartite_config;
  s.num_bits = num_bits;
  s.num_checks = num_checks;
  s.bit_degree = bit_degree;
  s.seed = seed;
  s.validate();
  return s;
}

void EnsembleSpec::validate() const {
  switch (kind) {
    case EnsembleKind::point_mass:
      return;
    case EnsembleKind::erdos_renyi:
      if (N < 1) throw std::invalid_argument("erdos_renyi needs N >= 1");
      if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi needs p in (0, 1]");
      return;
    case EnsembleKind::bipartite_config:
      if (num_bits < 1 || num_checks < 1 || bit_degree < 1)
        throw std::invalid_argument("bipartite_config counts must be >= 1");
      if ((num_bits * bit_degree) % num_checks != 0)
        throw std::invalid_argument(
            "bipartite_config needs num_bits*bit_degree divisible by num_checks");
      return;
  }
  throw std::invalid_argument("unknown ensemble kind");
}

std::string EnsembleSpec::kind_name() const {
  switch (kind) {
    case EnsembleKind::point_mass:
      return "point_mass";
    case EnsembleKind::erdos_renyi:
      return "erdos_renyi";
    case EnsembleKind::bipartite_config:
      return "bipartite_config";
  }
  return "?";
}

UndirectedMultigraph sample_graph(const EnsembleSpec& spec, std::uint64_t index) {
  spec.validate();
  switch (spec.kind) {
    case EnsembleKind::point_mass:
      return spec.graph;
    case EnsembleKind::erdos_renyi: {
      RngStream rng(spec.seed, index);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      for (std::uint32_t i = 0; i < spec.N; ++i)
        for (std::uint32_t j = i + 1; j < spec.N; ++j)
          if (rng.bernoulli(spec.p)) edges.emplace_back(i, j);
      return UndirectedMultigraph(spec.N, std::move(edges));
    }
    case EnsembleKind::bipartite_config: {
      RngStream rng(spec.seed, index);
      std::size_t stubs = spec.num_bits * spec.bit_degree;
      std::size_t check_degree = stubs / spec.num_checks;
      std::vector<std::uint32_t> check_stubs(stubs);
      for (std::size_t s = 0; s < stubs; ++s)
        check_stubs[s] = static_cast<std::uint32_t>(spec.num_bits + s / check_degree);
      rng.shuffle(check_stubs);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(stubs);
      for (std::size_t s = 0; s < stubs; ++s)
        edges[s] = {static_cast<std::uint32_t>(s / spec.bit_degree), check_stubs[s]};
      return UndirectedMultigraph(spec.num_bits + spec.num_checks, std::move(edges));
    }
  }
  throw std::invalid_argument("unknown ensemble kind");
}

AllSamplesExcluded::AllSamplesExcluded(double rmin, double rmedian, double u)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "every sample excluded at u = " << u << " (radius min " << rmin << ", median "
           << rmedian << ")";
        return os.str();
      }()),
      radius_min(rmin),
      radius_median(rmedian) {}

namespace {

struct SampleEval {
  double radius = std::numeric_limits<double>::infinity();
  bool has_matrix = false;
  Mat<double> B;
};

SampleEval eval_sample(const EnsembleSpec& spec, std::uint64_t index) {
  SampleEval ev;
  UndirectedMultigraph g = sample_graph(spec, index);
  if (g.num_edges() == 0) return ev;  // det(I) = 1, infinite radius
  // acyclic graph: B is nilpotent, det(I - uB) = 1 for every u
  if (g.num_edges() + g.num_components() == g.num_vertices()) return ev;
  EdgeAdjacencyMatrix adj(g);
  ev.B = adj.dense();
  ev.has_matrix = true;
  double rho = spectral_radius(ev.B);
  ev.radius = rho > 0.0 ? 1.0 / rho : std::numeric_limits<double>::infinity();
  return ev;
}

struct PointAccum {
  RunningStats stats;
  std::size_t excluded = 0;
  std::size_t ill_conditioned = 0;
};

struct GridChunk {
  std::vector<PointAccum> points;
  std::vector<double> radii;
};

double median_of(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<ZetaEstimate> averaged_zeta_impl(const EnsembleSpec& spec,
                                             const std::vector<double>& us, std::size_t S,
                                             unsigned threads) {
  if (S < 1) throw std::invalid_argument("need at least one sample");
  auto chunks = run_chunked<GridChunk>(S, threads, [&](std::size_t, std::size_t b, std::size_t e) {
    GridChunk ch;
    ch.points.resize(us.size());
    ch.radii.reserve(e - b);
    for (std::size_t s = b; s < e; ++s) {
      SampleEval ev = eval_sample(spec, s);
      ch.radii.push_back(ev.radius);
      for (std::size_t ui = 0; ui < us.size(); ++ui) {
        double u = us[ui];
        if (std::abs(u) >= ev.radius - kRadiusExclusionMargin) {
          ++ch.points[ui].excluded;
          continue;
        }
        double value = 1.0;
        if (ev.has_matrix && u != 0.0) {
          std::size_t dim = ev.B.rows();
          Mat<double> m = Mat<double>::identity(dim);
          for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) -= u * ev.B(i, j);
          LuDet d = det_lu(m);
          if (d.singular) {
            ++ch.points[ui].excluded;
            continue;
          }
          if (d.min_pivot < 1e-12) ++ch.points[ui].ill_conditioned;
          value = 1.0 / d.value;
        }
        ch.points[ui].stats.add(value);
      }
    }
    return ch;
  });

  std::vector<double> radii;
  radii.reserve(S);
  std::vector<PointAccum> total(us.size());
  for (const auto& ch : chunks) {
    radii.insert(radii.end(), ch.radii.begin(), ch.radii.end());
    for (std::size_t ui = 0; ui < us.size(); ++ui) {
      total[ui].stats.merge(ch.points[ui].stats);
      total[ui].excluded += ch.points[ui].excluded;
      total[ui].ill_conditioned += ch.points[ui].ill_conditioned;
    }
  }
  double rmin = radii.empty() ? std::numeric_limits<double>::quiet_NaN()
                              : *std::min_element(radii.begin(), radii.end());
  double rmed = median_of(radii);

  std::vector<ZetaEstimate> out(us.size());
  for (std::size_t ui = 0; ui < us.size(); ++ui) {
    ZetaEstimate& z = out[ui];
    z.u = us[ui];
    z.included = total[ui].stats.n;
    z.excluded = total[ui].excluded;
    z.ill_conditioned = total[ui].ill_conditioned;
    z.radius_min = rmin;
    z.radius_median = rmed;
    if (z.included == 0) {
      z.mean = std::numeric_limits<double>::quiet_NaN();
      z.stderr_mean = std::numeric_limits<double>::quiet_NaN();
    } else {
      z.mean = total[ui].stats.mean;
      z.stderr_mean = total[ui].stats.stderr_mean();
    }
  }
  return out;
}

}  // namespace

ZetaEstimate averaged_zeta(const EnsembleSpec& spec, double u, std::size_t S, unsigned threads) {
  auto out = averaged_zeta_impl(spec, {u}, S, threads);
  if (out[0].included == 0)
    throw AllSamplesExcluded(out[0].radius_min, out[0].radius_median, u);
  return out[0];
}

std::vector<ZetaEstimate> averaged_zeta_grid(const EnsembleSpec& spec,
                                             const std::vector<double>& us, std::size_t S,
                                             unsigned threads) {
  return averaged_zeta_impl(spec, us, S, threads);
}

GaussianEstimate gaussian_det_estimator(const Mat<double>& m, double u, std::size_t S,
                                        GaussianVariant variant, std::uint64_t seed,
                                        unsigned threads) {
  if (!m.square()) throw std::invalid_argument("estimator needs a square matrix");
  if (S < 1) throw std::invalid_argument("need at least one sample");
  std::size_t n = m.rows();
  double rho = spectral_radius(m);
  Mat<double> sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym(i, j) = 0.5 * (m(i, j) + m(j, i));
  double rho_sym = spectral_radius(sym);
  if (std::abs(u) * rho >= 1.0 || std::abs(u) * rho_sym >= 1.0)
    throw std::domain_error("u lies outside the estimator's convergence region");

  auto chunks = run_chunked<RunningStats>(S, threads, [&](std::size_t, std::size_t b,
                                                          std::size_t e) {
    RunningStats st;
    std::vector<double> y(n), z(n), zi(n);
    for (std::size_t s = b; s < e; ++s) {
      RngStream rng(seed, s);
      if (variant == GaussianVariant::paper_real) {
        for (std::size_t i = 0; i < n; ++i) y[i] = rng.normal();
        for (std::size_t i = 0; i < n; ++i) z[i] = rng.normal();
        // (u/2) z^T (m + m^T) y = u z^T sym y
        double q = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double acc = 0.0;
          for (std::size_t j = 0; j < n; ++j) acc += sym(i, j) * y[j];
          q += z[i] * acc;
        }
        st.add(std::exp(u * q));
      } else {
        // z = (a + i b)/sqrt(2), exponent u z^* m z
        static constexpr double inv_sqrt2 = 0.70710678118654752440;
        for (std::size_t i = 0; i < n; ++i) z[i] = rng.normal() * inv_sqrt2;
        for (std::size_t i = 0; i < n; ++i) zi[i] = rng.normal() * inv_sqrt2;
        double re = 0.0, im = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double mr = 0.0, mi = 0.0;
          for (std::size_t j = 0; j < n; ++j) {
            mr += m(i, j) * z[j];
            mi += m(i, j) * zi[j];
          }
          re += z[i] * mr + zi[i] * mi;
          im += z[i] * mi - zi[i] * mr;
        }
        // Re exp(u (re + i im))
        st.add(std::exp(u * re) * std::cos(u * im));
      }
    }
    return st;
  });
  RunningStats total;
  for (const auto& st : chunks) total.merge(st);
  GaussianEstimate est;
  est.mean = total.mean;
  est.stderr_mean = total.stderr_mean();
  est.samples = total.n;
  return est;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int k) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self) -> void {
    int first = -1;
    for (int i = 0; i < k; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < k; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(first, j);
      self(self);
      cur.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

std::string matching_str(const std::vector<std::pair<int, int>>& m) {
  std::ostringstream os;
  for (auto [a, b] : m) os << "(" << a << b << ")";
  return os.str();
}

// cycle lengths (in legs) of the union of two perfect matchings on k legs
std::vector<int> pairing_cycles(const std::vector<std::pair<int, int>>& sigma,
                                const std::vector<std::pair<int, int>>& tau, int k) {
  std::vector<int> smate(k), tmate(k);
  for (auto [a, b] : sigma) smate[a] = b, smate[b] = a;
  for (auto [a, b] : tau) tmate[a] = b, tmate[b] = a;
  std::vector<bool> seen(k, false);
  std::vector<int> lens;
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    int len = 0, v = s;
    bool use_sigma = true;
    do {
      seen[v] = true;
      ++len;
      v = use_sigma ? smate[v] : tmate[v];
      use_sigma = !use_sigma;
    } while (v != s || !use_sigma);
    lens.push_back(len);
  }
  return lens;
}

}  // namespace

WickCoefficient wick_coefficient(const Mat<mpq_class>& m, std::size_t k) {
  if (!m.square()) throw std::invalid_argument("wick coefficient needs a square matrix");
  if (k > 8) throw std::domain_error("wick coefficient capped at k = 8");
  WickCoefficient out;
  out.k = k;
  if (k == 0) {
    out.value = 1;
    return out;
  }
  if (k % 2 == 1) {
    out.value = 0;  // odd moments of centered Gaussians vanish
    return out;
  }
  std::size_t n = m.rows();
  Mat<mpq_class> A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = m(i, j) + m(j, i);
  // G = A^T A = A^2; a union cycle of 2l legs contributes Tr(G^l)
  Mat<mpq_class> G = A * A;
  std::vector<mpq_class> trG(k / 2 + 1);
  Mat<mpq_class> P = Mat<mpq_class>::identity(n);
  for (std::size_t l = 1; l <= k / 2; ++l) {
    P = P * G;
    trG[l] = P.trace();
  }
  auto matchings = perfect_matchings(static_cast<int>(k));
  mpq_class moment = 0;
  for (const auto& sigma : matchings)
    for (const auto& tau : matchings) {
      mpq_class prod = 1;
      for (int len : pairing_cycles(sigma, tau, static_cast<int>(k))) prod *= trG[len / 2];
      moment += prod;
    }
  mpz_class denom = 1;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(k));
  for (std::size_t i = 2; i <= k; ++i) denom *= static_cast<unsigned long>(i);
  out.value = moment / mpq_class(denom);
  return out;
}

FourCycleCensus four_cycle_term_census(const EdgeAdjacencyMatrix& m) {
  if (m.base().num_edges() > 8)
    throw std::invalid_argument("census intended for graphs with at most 8 edges");
  std::size_t n = m.dim();
  Mat<mpz_class> B = m.dense_int();
  Mat<mpz_class> A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = B(i, j) + B(j, i);
  Mat<mpz_class> A2 = A * A;
  Mat<mpz_class> B2 = B * B;
  FourCycleCensus c;
  c.tr_A2 = A2.trace();
  c.tr_A4 = (A2 * A2).trace();
  c.tr_B2 = B2.trace();
  c.tr_B4 = (B2 * B2).trace();

  auto matchings = perfect_matchings(4);
  for (const auto& sigma : matchings)
    for (const auto& tau : matchings) {
      FourCycleCensus::Row row;
      row.sigma = matching_str(sigma);
      row.tau = matching_str(tau);
      auto lens = pairing_cycles(sigma, tau, 4);
      mpz_class prod = 1;
      for (int len : lens) prod *= len == 2 ? c.tr_A2 : c.tr_A4;
      row.shape = lens.size() == 2 ? "2+2" : "4";
      row.contribution = prod;
      c.moment4 += prod;
      c.rows.push_back(std::move(row));
    }
  c.wick4 = mpq_class(c.moment4) / 384;  // 2^4 4!

  auto primes = prime_cycles(m.base(), 4);
  auto counts = prime_cycle_length_counts(primes, 4);
  c.prime_2_classes = counts[2];
  c.prime_4_classes = counts[4];
  mpz_class expect2 = 2 * mpz_class(static_cast<unsigned long>(c.prime_2_classes));
  mpz_class expect4 = expect2 + 4 * mpz_class(static_cast<unsigned long>(c.prime_4_classes));
  c.prime_match = (c.tr_B2 == expect2) && (c.tr_B4 == expect4);
  return c;
}

}  // namespace zetacode
