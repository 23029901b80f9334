#pragma once

// Exact linear algebra over Q and Z. Every cohomology dimension in the
// library bottoms out in rank() or smith_normal_form() below.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "snccoh/error.hpp"

namespace snccoh {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense row-major matrix. Matrices with zero rows or zero columns are valid
/// and stand for maps into or out of the zero space.
template <typename Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
      throw Error(ErrorKind::ShapeMismatch, "set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw Error(ErrorKind::ShapeMismatch, "product of " + shape() + " and " + rhs.shape());
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          if (sgn(rhs(k, j)) != 0) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    require_same_shape(rhs);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    require_same_shape(rhs);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  Matrix scaled(const Scalar& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw Error(ErrorKind::ShapeMismatch, shape() + " vs " + rhs.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// [A | B], requires equal row counts.
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
/// [A ; B], requires equal column counts.
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix to_rational(const IntegerMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Dimension of ker(d_out) / im(d_in) at the joint V where
/// d_in : U -> V and d_out : V -> W.
/// Throws ShapeMismatch if the joint dimensions disagree and
/// CompositionNonzero if d_out * d_in != 0.
std::size_t homology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out);

/// Columns form a basis of the null space of m (cols(m) x nullity).
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Some X with A X = B, or nullopt when the system is inconsistent.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Nonzero invariant factors d1 | d2 | ... of m, all positive; their count
/// equals the rank of m.
std::vector<Integer> smith_normal_form(const IntegerMatrix& m);

/// "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& q);
/// Accepts "n" or "n/d" (optionally signed). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace snccoh
