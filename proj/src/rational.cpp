#include "negcurve/linalg.hpp"
#include "negcurve/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace negcurve {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  const auto digits = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  const Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  return Rational(Integer(n), q);
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Rational> to_std(const RationalVector& v) { return {v.begin(), v.end()}; }

MatrixX<Integer> clear_row_denominators(const RationalMatrix& a, VectorX<Integer>* scales) {
  MatrixX<Integer> out(a.rows(), a.cols());
  if (scales) scales->resize(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer l(1);
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(a(i, j)));
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out(i, j) = boost::multiprecision::numerator(a(i, j)) * (l / boost::multiprecision::denominator(a(i, j)));
    if (scales) (*scales)(i) = l;
  }
  return out;
}

std::optional<RationalVector> solve_exact(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw std::invalid_argument("solve_exact: dimension mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const MatrixX<Integer> scaled = clear_row_denominators(aug);
  const auto sol = bareiss_solve<Integer>(scaled.leftCols(a.cols()), scaled.col(a.cols()));
  if (!sol) return std::nullopt;
  RationalVector x(a.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Rational(sol->numerators(i), sol->denominator);
  return x;
}

Eigen::Index rank_exact(const RationalMatrix& a) {
  RationalMatrix m = a;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.row(piv).swap(m.row(rank));
    for (Eigen::Index i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(rank, col);
      m.row(i) -= f * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

}  // namespace negcurve
