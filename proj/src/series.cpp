#include "zetacode/series.hpp"

#include <sstream>
#include <stdexcept>

namespace zetacode {

MultiPoly MultiPoly::constant(std::size_t vars, std::uint32_t truncation, const mpq_class& c) {
  MultiPoly p(vars, truncation);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t vars, std::uint32_t truncation, std::size_t index) {
  if (index >= vars) throw std::invalid_argument("variable index out of range");
  MultiPoly p(vars, truncation);
  Exponents e(vars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

mpq_class MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  if (total_degree(e) > truncation_) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::add_shifted(const MultiPoly& src, const Exponents& shift, const mpq_class& c) {
  if (src.vars_ != vars_ || shift.size() != vars_)
    throw std::invalid_argument("exponent arity mismatch");
  std::uint32_t base = total_degree(shift);
  Exponents e(vars_);
  for (const auto& [se, sc] : src.terms_) {
    if (base + total_degree(se) > truncation_) continue;
    for (std::size_t i = 0; i < vars_; ++i) e[i] = se[i] + shift[i];
    add_term(e, sc * c);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(vars_, truncation_);
  for (const auto& [e, c] : terms_) r.add_shifted(o, e, c);
  return r;
}

MultiPoly MultiPoly::operator*(const mpq_class& c) const {
  MultiPoly r(vars_, truncation_);
  if (c == 0) return r;
  for (const auto& [e, q] : terms_) r.terms_.emplace(e, q * c);
  return r;
}

MultiPoly MultiPoly::times_variable(std::size_t index) const {
  if (index >= vars_) throw std::invalid_argument("variable index out of range");
  MultiPoly r(vars_, truncation_);
  Exponents e(vars_);
  for (const auto& [se, c] : terms_) {
    if (total_degree(se) + 1 > truncation_) continue;
    e = se;
    ++e[index];
    r.terms_.emplace(e, c);
  }
  return r;
}

MultiPoly MultiPoly::restricted(std::uint32_t new_truncation) const {
  MultiPoly r(vars_, new_truncation);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) > new_truncation) continue;
    r.terms_.emplace(e, c);
  }
  return r;
}

bool MultiPoly::integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

double MultiPoly::eval(const std::vector<double>& point) const {
  if (point.size() != vars_) throw std::invalid_argument("evaluation arity mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < vars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

mpq_class MultiPoly::eval_exact(const std::vector<mpq_class>& point) const {
  if (point.size() != vars_) throw std::invalid_argument("evaluation arity mismatch");
  mpq_class acc = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < vars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPoly exp_series(const MultiPoly& s) {
  if (s.constant_term() != 0) throw std::invalid_argument("exp needs a zero constant term");
  MultiPoly acc = MultiPoly::constant(s.vars(), s.truncation(), 1);
  MultiPoly term = acc;
  for (std::uint32_t k = 1; k <= s.truncation(); ++k) {
    term = term * s * mpq_class(1, k);
    if (term.is_zero()) break;
    acc += term;
  }
  return acc;
}

MultiPoly reciprocal_series(const MultiPoly& f) {
  mpq_class c0 = f.constant_term();
  if (c0 == 0) throw std::invalid_argument("reciprocal needs a nonzero constant term");
  // 1/f = (1/c0) * sum_k h^k with h = 1 - f/c0
  MultiPoly h = MultiPoly::constant(f.vars(), f.truncation(), 1) - f * (1 / c0);
  MultiPoly acc = MultiPoly::constant(f.vars(), f.truncation(), 1);
  MultiPoly term = acc;
  for (std::uint32_t k = 1; k <= f.truncation(); ++k) {
    term = term * h;
    if (term.is_zero()) break;
    acc += term;
  }
  return acc * (1 / c0);
}

UniPoly::UniPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const mpz_class& c) { return UniPoly(std::vector<mpz_class>{c}); }

UniPoly UniPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<mpz_class> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(std::size_t k) const {
  UniPoly r = UniPoly::constant(1);
  for (std::size_t i = 0; i < k; ++i) r = r * (*this);
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<mpz_class> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(v));
}

std::vector<mpz_class> UniPoly::padded(std::size_t d) const {
  std::vector<mpz_class> v(d + 1);
  for (std::size_t i = 0; i <= d && i < c_.size(); ++i) v[i] = c_[i];
  return v;
}

mpq_class UniPoly::eval(const mpq_class& u) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * u + c_[i];
  return acc;
}

double UniPoly::eval(double u) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * u + c_[i].get_d();
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    mpz_class mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  if (a.size() != b.size()) throw std::invalid_argument("series length mismatch");
  QSeries r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

QSeries series_exp(const QSeries& s) {
  if (s.empty() || s[0] != 0) throw std::invalid_argument("series exp needs zero constant term");
  QSeries acc(s.size());
  acc[0] = 1;
  QSeries term = acc;
  for (std::size_t k = 1; k < s.size(); ++k) {
    term = series_mul(term, s);
    mpq_class inv_k(1, static_cast<unsigned long>(k));
    bool all_zero = true;
    for (auto& t : term) {
      t *= inv_k;
      if (t != 0) all_zero = false;
    }
    if (all_zero) break;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
  }
  return acc;
}

QSeries series_recip(const QSeries& f) {
  if (f.empty() || f[0] == 0) throw std::invalid_argument("series reciprocal needs nonzero constant term");
  QSeries g(f.size());
  g[0] = 1 / f[0];
  for (std::size_t k = 1; k < f.size(); ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += f[j] * g[k - j];
    g[k] = -acc / f[0];
  }
  return g;
}

QSeries series_from_unipoly(const UniPoly& p, std::size_t D) {
  QSeries s(D + 1);
  for (std::size_t i = 0; i <= D; ++i) s[i] = mpq_class(p.coeff(i));
  return s;
}

UniPoly unipoly_from_series(const QSeries& s) {
  std::vector<mpz_class> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].get_den() != 1) throw std::logic_error("series coefficient is not an integer");
    v[i] = s[i].get_num();
  }
  return UniPoly(std::move(v));
}

}  // namespace zetacode
