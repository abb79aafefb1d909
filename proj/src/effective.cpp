#include "negcurve/effective.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <stdexcept>

namespace negcurve {

namespace {

std::int64_t falling(int a, int j) {
  std::int64_t r = 1;
  for (int t = 0; t < j; ++t) r *= a - t;
  return r;
}

std::vector<std::array<int, 3>> derivative_orders(int order) {
  return monomials(order);
}

std::vector<int> prime_factors(int m) {
  std::vector<int> out;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      out.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) out.push_back(m);
  return out;
}

void require_coordinates(const Configuration& cfg) {
  if (!cfg.has_coordinates()) throw std::invalid_argument("effectivity needs point coordinates");
}

}  // namespace

std::vector<std::array<int, 3>> monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

namespace {

std::array<std::vector<CycloNum>, 3> coordinate_powers(const Configuration& cfg, int point, int degree) {
  std::array<std::vector<CycloNum>, 3> pw;
  for (int axis = 0; axis < 3; ++axis) {
    pw[axis].push_back(CycloNum(cfg.order, Rational(1)));
    for (int e = 1; e <= degree; ++e) pw[axis].push_back(pw[axis].back() * cfg.points[point].coords[axis]);
  }
  return pw;
}

// d^alpha of each monomial evaluated at the point.
std::vector<CycloNum> exact_row(const Configuration& cfg, const std::vector<std::array<int, 3>>& mons,
                                const std::array<std::vector<CycloNum>, 3>& pw, const std::array<int, 3>& alpha) {
  std::vector<CycloNum> row;
  for (const auto& mon : mons) {
    CycloNum entry(cfg.order, Rational(1));
    for (int axis = 0; axis < 3; ++axis) {
      if (mon[axis] < alpha[axis]) {
        entry = CycloNum(cfg.order, Rational(0));
        break;
      }
      entry = entry * CycloNum(cfg.order, Rational(falling(mon[axis], alpha[axis]))) * pw[axis][mon[axis] - alpha[axis]];
    }
    row.push_back(std::move(entry));
  }
  return row;
}

}  // namespace

std::int64_t condition_count(const DivisorClass& c) {
  std::int64_t n = 0;
  for (auto k : c.mults)
    if (k > 0) n += k * (k + 1) / 2;
  return n;
}

std::vector<Form> sections_basis_exact(const Configuration& cfg, const DivisorClass& c) {
  require_coordinates(cfg);
  if (c.points() != cfg.s) throw DimensionError("class has the wrong number of points");
  if (c.degree < 0) return {};
  const int d = static_cast<int>(c.degree);
  const auto mons = monomials(d);
  const std::size_t n = mons.size();

  std::vector<std::vector<CycloNum>> rows;
  for (int i = 0; i < cfg.s; ++i) {
    const auto k = c.mults(i);
    if (k <= 0) continue;
    if (k > d) return {};
    const auto pw = coordinate_powers(cfg, i, d);
    for (const auto& alpha : derivative_orders(static_cast<int>(k) - 1)) rows.push_back(exact_row(cfg, mons, pw, alpha));
  }

  // reduced row echelon form over Q(zeta)
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const CycloNum inv = rows[rank][col].inverse();
    for (std::size_t j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const CycloNum f = rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }

  std::vector<Form> basis;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Form f(n, CycloNum(cfg.order, Rational(0)));
    f[free] = CycloNum(cfg.order, Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) f[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(f));
  }
  return basis;
}

std::size_t sections_exact(const Configuration& cfg, const DivisorClass& c) {
  return sections_basis_exact(cfg, c).size();
}

bool partials_vanish_exact(const Configuration& cfg, const Form& f, int degree, int point, int order) {
  require_coordinates(cfg);
  if (order > degree) return true;
  const auto mons = monomials(degree);
  if (f.size() != mons.size()) throw std::invalid_argument("form has the wrong number of coefficients");
  const auto pw = coordinate_powers(cfg, point, degree);
  for (const auto& alpha : derivative_orders(order)) {
    const auto row = exact_row(cfg, mons, pw, alpha);
    CycloNum acc(cfg.order, Rational(0));
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!f[j].is_zero() && !row[j].is_zero()) acc = acc + row[j] * f[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

ModularSections::ModularSections(const Configuration& cfg, int degree) : d_(degree), monomials_(monomials(degree)) {
  require_coordinates(cfg);
  if (degree < 0) throw std::invalid_argument("negative degree");
  const int m = cfg.order;
  // p = 1 (mod m) so that F_p contains the m-th roots of unity. Below 2^28 a
  // dot product of up to 256 reduced terms fits in 64 bits before reduction.
  Integer candidate = (Integer(1) << 28) / m * m + 1 - m;
  if (candidate <= Integer(degree)) throw std::invalid_argument("degree too large for the modulus");
  while (!boost::multiprecision::miller_rabin_test(candidate, 25)) candidate -= m;
  p_ = candidate.convert_to<std::uint64_t>();

  std::uint64_t omega = 1;
  const auto factors = prime_factors(m);
  for (std::uint64_t a = 2;; ++a) {
    omega = power(a, (p_ - 1) / static_cast<std::uint64_t>(m));
    bool primitive = true;
    for (int q : factors)
      if (power(omega, static_cast<std::uint64_t>(m / q)) == 1) primitive = false;
    if (primitive) break;
  }

  const auto reduce = [&](const CycloNum& z) {
    std::uint64_t acc = 0, w = 1;
    for (const auto& coef : z.coeffs()) {
      const Integer num = boost::multiprecision::numerator(coef);
      const Integer den = boost::multiprecision::denominator(coef);
      Integer r = num % Integer(p_);
      if (r < 0) r += Integer(p_);
      const std::uint64_t dm = (den % Integer(p_)).convert_to<std::uint64_t>();
      if (dm == 0) throw std::domain_error("coordinate denominator divisible by the modulus");
      acc = (acc + mul(mul(r.convert_to<std::uint64_t>(), inverse(dm)), w)) % p_;
      w = mul(w, omega);
    }
    return acc;
  };

  for (const auto& pt : cfg.points) {
    std::array<Vector, 3> pw;
    for (int axis = 0; axis < 3; ++axis) {
      const std::uint64_t x = reduce(pt.coords[axis]);
      pw[axis].push_back(1);
      for (int e = 1; e <= degree; ++e) pw[axis].push_back(mul(pw[axis].back(), x));
    }
    powers_.push_back(std::move(pw));
  }
  factorial_.assign(static_cast<std::size_t>(degree) + 1, 1);
  for (int i = 1; i <= degree; ++i) factorial_[i] = mul(factorial_[i - 1], static_cast<std::uint64_t>(i));
  inv_factorial_.resize(factorial_.size());
  for (std::size_t i = 0; i < factorial_.size(); ++i) inv_factorial_[i] = inverse(factorial_[i]);
}

std::uint64_t ModularSections::power(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ModularSections::Basis ModularSections::full() const {
  Basis b(monomials_.size(), Vector(monomials_.size(), 0));
  for (std::size_t i = 0; i < b.size(); ++i) b[i][i] = 1;
  return b;
}

std::uint64_t ModularSections::dot(const Vector& a, const Vector& b) const {
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    acc += a[j] * b[j];
    if ((j & 127) == 127) acc %= p_;
  }
  return acc % p_;
}

ModularSections::Vector ModularSections::condition_row(int point, const std::array<int, 3>& alpha) const {
  const auto& pw = powers_.at(static_cast<std::size_t>(point));
  Vector row(monomials_.size());
  for (std::size_t j = 0; j < monomials_.size(); ++j) {
    const auto& mon = monomials_[j];
    std::uint64_t entry = 1;
    for (int axis = 0; axis < 3 && entry; ++axis) {
      if (mon[axis] < alpha[axis]) {
        entry = 0;
      } else {
        const std::uint64_t ff = mul(factorial_[mon[axis]], inv_factorial_[mon[axis] - alpha[axis]]);
        entry = mul(entry, mul(ff, pw[axis][mon[axis] - alpha[axis]]));
      }
    }
    row[j] = entry;
  }
  return row;
}

void ModularSections::restrict(Basis& basis, int point, int order) const {
  const std::size_t n = monomials_.size();
  for (const auto& alpha : derivative_orders(order)) {
    if (basis.empty()) return;
    const Vector row = condition_row(point, alpha);
    Vector w(basis.size());
    std::size_t pivot = basis.size();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      w[b] = dot(row, basis[b]);
      if (w[b] && pivot == basis.size()) pivot = b;
    }
    if (pivot == basis.size()) continue;
    const std::uint64_t inv = inverse(w[pivot]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (b == pivot || !w[b]) continue;
      const std::uint64_t f = mul(w[b], inv);
      const std::uint64_t g = p_ - f;
      for (std::size_t j = 0; j < n; ++j) basis[b][j] = (basis[b][j] + g * basis[pivot][j]) % p_;
    }
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(pivot));
  }
}

bool ModularSections::partials_vanish(const Vector& form, int point, int order) const {
  if (order > d_) return true;
  for (const auto& alpha : derivative_orders(order)) {
    if (dot(condition_row(point, alpha), form)) return false;
  }
  return true;
}

std::size_t ModularSections::dimension(const DivisorClass& c) const {
  if (c.degree != d_) throw std::invalid_argument("class degree differs from the section space");
  Basis b = full();
  for (int i = 0; i < c.points(); ++i)
    if (c.mults(i) > 0) {
      if (c.mults(i) > d_) return 0;
      restrict(b, i, static_cast<int>(c.mults(i)) - 1);
    }
  return b.size();
}

}  // namespace negcurve
