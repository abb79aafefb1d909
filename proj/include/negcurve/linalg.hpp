#pragma once

// Fraction-free (Bareiss) elimination over exact integer scalars.
//
// Every intermediate entry is a minor of the input, so divisions are exact.
// The int64 instantiation checks each step in 128-bit arithmetic and throws
// ArithmeticOverflow; callers fall back to the Integer instantiation.

#include "negcurve/rational.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace negcurve {

struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("int64 overflow in fraction-free elimination") {}
};

/// x = numerators / denominator, denominator > 0.
template <typename Scalar>
struct FractionFreeSolution {
  VectorX<Scalar> numerators;
  Scalar denominator;
};

namespace detail {

inline std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw ArithmeticOverflow();
  return static_cast<std::int64_t>(v);
}

// (a*p - b*c) / prev, exact.
inline std::int64_t bareiss_update(std::int64_t a, std::int64_t p, std::int64_t b,
                                   std::int64_t c, std::int64_t prev) {
  const __int128 v = static_cast<__int128>(a) * p - static_cast<__int128>(b) * c;
  return narrow(v / prev);
}

inline Integer bareiss_update(const Integer& a, const Integer& p, const Integer& b,
                              const Integer& c, const Integer& prev) {
  Integer v = a * p - b * c;
  if (prev != 1) v /= prev;
  return v;
}

// Fraction-free forward elimination on the first `pivot_cols` columns. Stops at
// the first column without a pivot and returns the number of pivots placed;
// row swaps are tracked through `sign`.
template <typename Scalar>
Eigen::Index bareiss_echelon(MatrixX<Scalar>& m, Eigen::Index pivot_cols, int& sign) {
  sign = 1;
  Scalar prev(1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < pivot_cols && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) return row;
    if (piv != row) {
      m.row(piv).swap(m.row(row));
      sign = -sign;
    }
    const Scalar p = m(row, col);
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      const Scalar lead = m(i, col);
      for (Eigen::Index j = col + 1; j < m.cols(); ++j)
        m(i, j) = bareiss_update(m(i, j), p, lead, m(row, j), prev);
      m(i, col) = Scalar(0);
    }
    prev = p;
    ++row;
  }
  return row;
}

}  // namespace detail

/// Solves a x = b for square a. Returns nullopt when a is singular.
template <typename Scalar>
std::optional<FractionFreeSolution<Scalar>> bareiss_solve(const MatrixX<Scalar>& a,
                                                          const VectorX<Scalar>& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw std::invalid_argument("bareiss_solve: dimension mismatch");
  MatrixX<Scalar> m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;
  int sign = 1;
  if (detail::bareiss_echelon(m, n, sign) < n) return std::nullopt;

  // m(n-1, n-1) is +-det(a); det * x is integral, so each division is exact.
  const Scalar det = m(n - 1, n - 1);
  VectorX<Scalar> y(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    if constexpr (std::is_same_v<Scalar, std::int64_t>) {
      __int128 acc = static_cast<__int128>(det) * m(i, n);
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= static_cast<__int128>(m(i, j)) * y(j);
      y(i) = detail::narrow(acc / m(i, i));
    } else {
      Scalar acc = det * m(i, n);
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= m(i, j) * y(j);
      y(i) = acc / m(i, i);
    }
  }
  FractionFreeSolution<Scalar> out{std::move(y), det};
  if (out.denominator < 0) {
    out.numerators = -out.numerators;
    out.denominator = -out.denominator;
  }
  return out;
}

template <typename Scalar>
Scalar bareiss_determinant(MatrixX<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  int sign = 1;
  if (detail::bareiss_echelon(m, m.cols(), sign) < m.rows()) return Scalar(0);
  return sign > 0 ? Scalar(m(m.rows() - 1, m.cols() - 1)) : Scalar(-m(m.rows() - 1, m.cols() - 1));
}

/// Multiplies each row by the lcm of its denominators.
MatrixX<Integer> clear_row_denominators(const RationalMatrix& a, VectorX<Integer>* scales = nullptr);

/// Exact solve over Q via fraction-free elimination on the row-scaled system.
std::optional<RationalVector> solve_exact(const RationalMatrix& a, const RationalVector& b);

/// Rank by plain Gaussian elimination over Q (independent of the Bareiss path).
Eigen::Index rank_exact(const RationalMatrix& a);

}  // namespace negcurve
