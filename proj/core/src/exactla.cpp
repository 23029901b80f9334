#include "snccoh/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace snccoh {
namespace {

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in order. Zero entries are skipped, which keeps the sparse
/// 0/+-1 coboundary matrices cheap to reduce.
std::vector<std::size_t> reduce_rref(RationalMatrix& m, bool full) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(m(i, c)) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(pivot, j));

    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;

    std::vector<std::size_t> support;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (sgn(m(r, j)) != 0) support.push_back(j);

    const std::size_t first = full ? 0 : r + 1;
    for (std::size_t i = first; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      m(i, c) = 0;
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hstack " + a.shape() + " | " + b.shape());
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "vstack " + a.shape() + " ; " + b.shape());
  RationalMatrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  // Eliminate along the shorter side.
  RationalMatrix work = m.rows() <= m.cols() ? m : m.transpose();
  return reduce_rref(work, false).size();
}

std::size_t homology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out) {
  if (d_out.cols() != d_in.rows())
    throw Error(ErrorKind::ShapeMismatch,
                "joint dimension: d_in " + d_in.shape() + " feeds d_out " + d_out.shape());
  if (!(d_out * d_in).is_zero()) throw Error(ErrorKind::CompositionNonzero, "d_out * d_in != 0");
  const std::size_t joint = d_in.rows();
  const std::size_t kernel = joint - rank(d_out);
  return kernel - rank(d_in);
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  RationalMatrix work = m;
  const auto pivots = reduce_rref(work, true);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -work(r, f);
  }
  return basis;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve " + a.shape() + " against " + b.shape());
  RationalMatrix aug = hstack(a, b);
  const auto pivots = reduce_rref(aug, true);
  RationalMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;  // pivot in the right-hand side
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  }
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of " + m.shape());
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, RationalMatrix::identity(m.rows()));
}

std::vector<Integer> smith_normal_form(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> factors;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a != b)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a != b)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(m(i, j)) != 0 && (!found || abs(m(i, j)) < best)) {
          best = abs(m(i, j));
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (sgn(m(i, t)) != 0) {
          swap_rows(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (sgn(m(t, j)) != 0) {
          swap_cols(t, j);
          changed = true;
        }
      }
      if (changed) continue;

      // Row and column are clear; the pivot must divide the whole remainder.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) m(t, k) += m(i, k);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    factors.push_back(abs(m(t, t)));
  }
  return factors;
}

std::string format_rational(const Rational& q) {
  Rational canonical = q;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos)
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace snccoh
