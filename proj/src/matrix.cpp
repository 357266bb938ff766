#include "zetacode/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace zetacode {

LuDet det_lu(Mat<double> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  LuDet out;
  out.value = 1.0;
  out.min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    double p = m(piv, col);
    if (p == 0.0) {
      out.value = 0.0;
      out.min_pivot = 0.0;
      out.singular = true;
      return out;
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      out.value = -out.value;
    }
    out.min_pivot = std::min(out.min_pivot, std::abs(p));
    out.value *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = m(r, col) / p;
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  if (n == 0) out.min_pivot = 1.0;
  return out;
}

mpq_class det_exact(Mat<mpq_class> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return mpq_class(0);
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    const mpq_class p = m(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      mpq_class f = m(r, col) / p;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

namespace {

double sup_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

double spectral_radius(const Mat<double>& m, double tol, std::size_t max_iter) {
  if (!m.square()) throw std::invalid_argument("spectral radius of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 0.0;

  bool nonneg = true;
  for (std::size_t i = 0; i < n && nonneg; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < 0.0) {
        nonneg = false;
        break;
      }
  // For nonnegative matrices iterate on m + I: the shift removes rotation from
  // periodic spectra and the growth rate converges to rho(m) + 1.
  double shift = nonneg ? 1.0 : 0.0;

  auto run = [&](std::uint64_t seed_vec) {
    std::vector<double> x(n, 1.0), y(n);
    if (seed_vec) {
      std::uint64_t s = seed_vec;
      for (auto& xi : x) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        xi = 0.25 + static_cast<double>(s >> 40) / static_cast<double>(1ULL << 24);
      }
    }
    double prev = -1.0;
    std::size_t stable = 0;
    double est = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
      for (std::size_t i = 0; i < n; ++i) {
        double acc = shift * x[i];
        for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * x[j];
        y[i] = acc;
      }
      double norm = sup_norm(y);
      if (norm == 0.0) return std::make_pair(0.0 - shift, true);
      est = norm;  // x has sup norm 1
      for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
      if (it >= 10 && std::abs(est - prev) <= tol * std::max(1.0, est)) {
        if (++stable >= 5) return std::make_pair(est - shift, true);
      } else {
        stable = 0;
      }
      prev = est;
    }
    return std::make_pair(est - shift, false);
  };

  auto [val, ok] = run(0);
  if (!ok) {
    auto [val2, ok2] = run(0x9E3779B97F4A7C15ULL);
    if (ok2) return std::max(0.0, val2);
    val = std::max(val, val2);
  }
  return std::max(0.0, val);
}

}  // namespace zetacode
