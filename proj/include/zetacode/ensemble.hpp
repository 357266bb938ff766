#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zetacode/graph.hpp"
#include "zetacode/matrix.hpp"

namespace zetacode {

enum class EnsembleKind { point_mass, erdos_renyi, bipartite_config };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::point_mass;
  UndirectedMultigraph graph;  // point_mass
  std::size_t N = 0;           // erdos_renyi vertices
  double p = 0.0;              // erdos_renyi edge probability
  std::size_t num_bits = 0, num_checks = 0, bit_degree = 0;  // bipartite_config
  std::uint64_t seed = 0;

  static EnsembleSpec point_mass(UndirectedMultigraph g, std::uint64_t seed = 0);
  static EnsembleSpec erdos_renyi(std::size_t N, double p, std::uint64_t seed);
  static EnsembleSpec bipartite_config(std::size_t num_bits, std::size_t num_checks,
                                       std::size_t bit_degree, std::uint64_t seed);
  void validate() const;
  std::string kind_name() const;
};

// Deterministic in (spec.seed, index).
UndirectedMultigraph sample_graph(const EnsembleSpec& spec, std::uint64_t index);

struct ZetaEstimate {
  double u = 0.0;
  double mean = 0.0;
  double stderr_mean = 0.0;
  std::size_t included = 0;
  std::size_t excluded = 0;        // samples with |u| >= 1/rho(B) - margin
  std::size_t ill_conditioned = 0; // included but with a pivot below 1e-12
  double radius_min = 0.0;         // min over samples of 1/rho(B)
  double radius_median = 0.0;
};

inline constexpr double kRadiusExclusionMargin = 1e-9;

struct AllSamplesExcluded : std::runtime_error {
  double radius_min, radius_median;
  AllSamplesExcluded(double rmin, double rmedian, double u);
};

// Monte Carlo mean of det(I - u B(X_s))^{-1}. Throws AllSamplesExcluded when
// nothing survives the radius cut.
ZetaEstimate averaged_zeta(const EnsembleSpec& spec, double u, std::size_t S,
                           unsigned threads = 1);

// Same samples reused across the whole grid. Points where every sample is
// excluded come back with included = 0 and NaN mean instead of throwing.
std::vector<ZetaEstimate> averaged_zeta_grid(const EnsembleSpec& spec,
                                             const std::vector<double>& us, std::size_t S,
                                             unsigned threads = 1);

enum class GaussianVariant { paper_real, complex_gaussian };

struct GaussianEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;
  std::size_t samples = 0;
};

// Monte Carlo Gaussian-integral estimators for det(I - u m)^{-1}.
// paper_real: mean of exp((u/2) z^T (m + m^T) y), y and z real standard normal.
// complex_gaussian: mean of Re exp(u z^* m z), z standard complex normal; its
// expectation is exactly det(I - u m)^{-1}. Rejects u outside the convergence
// region (|u| rho(m) < 1 and |u| rho((m+m^T)/2) < 1).
GaussianEstimate gaussian_det_estimator(const Mat<double>& m, double u, std::size_t S,
                                        GaussianVariant variant, std::uint64_t seed,
                                        unsigned threads = 1);

struct WickCoefficient {
  std::size_t k = 0;
  mpq_class value;  // exact coefficient of u^k
};

// Coefficient of u^k in the moment expansion for a fixed matrix:
// (1/(2^k k!)) E[(z^T (m+m^T) y)^k], summed over Isserlis pairings exactly.
// k is capped at 8.
WickCoefficient wick_coefficient(const Mat<mpq_class>& m, std::size_t k);

// k = 4 pairing census on a Hashimoto matrix: per-pattern contributions, the
// pure non-backtracking trace content, and agreement with the prime cycle
// counts of the base graph (N_2 = 2 pi_2, N_4 = 2 pi_2 + 4 pi_4).
struct FourCycleCensus {
  struct Row {
    std::string sigma;       // Z-leg pairing, e.g. "(01)(23)"
    std::string tau;         // Y-leg pairing
    std::string shape;       // "2+2" (two 2-leg loops) or "4" (one 4-leg loop)
    mpz_class contribution;  // product of traces for this pattern
  };
  std::vector<Row> rows;  // all 9 patterns
  mpz_class moment4;      // sum of contributions = E[(z^T A y)^4], A = B + B^T
  mpq_class wick4;        // moment4 / (2^4 4!)
  mpz_class tr_A2, tr_A4;
  mpz_class tr_B2, tr_B4;  // pure-B words inside Tr(A^2), Tr(A^4)
  std::size_t prime_2_classes = 0, prime_4_classes = 0;
  bool prime_match = false;
};

FourCycleCensus four_cycle_term_census(const EdgeAdjacencyMatrix& m);

}  // namespace zetacode
