#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zetacode {

using Exponents = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// graded lexicographic: lower total degree first, then lex on the exponent vector
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Multivariate polynomial over Q truncated at a fixed total degree.
// Terms above the truncation are dropped on entry; zero coefficients are
// never stored. Equality compares variable count and stored terms.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, mpq_class, GradedLexLess>;

  MultiPoly(std::size_t vars, std::uint32_t truncation) : vars_(vars), truncation_(truncation) {}

  static MultiPoly constant(std::size_t vars, std::uint32_t truncation, const mpq_class& c);
  static MultiPoly variable(std::size_t vars, std::uint32_t truncation, std::size_t index);

  std::size_t vars() const { return vars_; }
  std::uint32_t truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpq_class coeff(const Exponents& e) const;
  mpq_class constant_term() const { return coeff(Exponents(vars_, 0)); }

  void add_term(const Exponents& e, const mpq_class& c);
  // adds c * u^shift * src, dropping anything past the truncation
  void add_shifted(const MultiPoly& src, const Exponents& shift, const mpq_class& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const mpq_class& c) const;
  // multiply by the single variable at index, shifting degrees up by one
  MultiPoly times_variable(std::size_t index) const;

  // same terms re-truncated at new_truncation <= truncation()
  MultiPoly restricted(std::uint32_t new_truncation) const;

  bool integer_coefficients() const;
  double eval(const std::vector<double>& point) const;
  mpq_class eval_exact(const std::vector<mpq_class>& point) const;

  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

 private:
  std::size_t vars_;
  std::uint32_t truncation_;
  TermMap terms_;
};

// exp of a series with zero constant term, truncated
MultiPoly exp_series(const MultiPoly& s);
// multiplicative inverse of a series with nonzero constant term, truncated
MultiPoly reciprocal_series(const MultiPoly& f);

// Univariate polynomial with exact integer coefficients, ascending order,
// trailing zeros trimmed. The zero polynomial has an empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpz_class> coeffs);
  static UniPoly constant(const mpz_class& c);
  static UniPoly monomial(const mpz_class& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  mpz_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly pow(std::size_t k) const;
  UniPoly derivative() const;
  // coefficients 0..d, zero-padded (ignores trailing-zero trimming)
  std::vector<mpz_class> padded(std::size_t d) const;

  mpq_class eval(const mpq_class& u) const;
  double eval(double u) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Dense univariate power series over Q, length D+1 (degrees 0..D).
using QSeries = std::vector<mpq_class>;

QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_exp(const QSeries& s);    // s[0] must be 0
QSeries series_recip(const QSeries& f);  // f[0] must be nonzero
QSeries series_from_unipoly(const UniPoly& p, std::size_t D);
// converts to integer coefficients, throwing if any entry is non-integral
UniPoly unipoly_from_series(const QSeries& s);

}  // namespace zetacode
