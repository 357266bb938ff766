#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace zetacode {

// Dense row-major matrix. T is double, mpz_class or mpq_class in practice.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    if (!square()) throw std::invalid_argument("trace of a non-square matrix");
    T s{};
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == T{}) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  Mat& operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    r += o;
    return r;
  }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

struct LuDet {
  double value = 0.0;
  double min_pivot = 0.0;  // smallest |pivot| seen; 0 when singular
  bool singular = false;
};

// Determinant by LU with partial pivoting.
LuDet det_lu(Mat<double> m);

// Exact determinant by fraction-free-ish Gaussian elimination over Q.
mpq_class det_exact(Mat<mpq_class> m);

// Largest eigenvalue magnitude by power iteration.
// Nonnegative matrices are shifted by +I so periodic spectra still converge.
double spectral_radius(const Mat<double>& m, double tol = 1e-10, std::size_t max_iter = 100000);

}  // namespace zetacode
