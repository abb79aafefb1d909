#include "negcurve/cyclo.hpp"
#include "negcurve/linalg.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace negcurve {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (den.back() != 1) throw std::logic_error("cyclotomic divisor is not monic");
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("x^m - 1 not divisible by lower cyclotomic factors");
  return quot;
}

void check_order(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
}

void same_order(const CycloNum& a, const CycloNum& b) {
  if (a.order() != b.order())
    throw OrderMismatch("cyclotomic orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
}

// Reduces a rational polynomial of any length modulo Phi_m.
RationalVector reduce(int m, std::vector<Rational> poly) {
  const Poly& phi = cyclotomic_polynomial(m);
  const std::size_t t = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > t;) {
    if (poly[i] == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j <= t; ++j)
      if (phi[j] != 0) poly[i - t + j] -= c * phi[j];
  }
  RationalVector out = RationalVector::Zero(static_cast<Eigen::Index>(t));
  for (std::size_t i = 0; i < std::min(t, poly.size()); ++i) out(static_cast<Eigen::Index>(i)) = poly[i];
  return out;
}

}  // namespace

int euler_phi(int m) {
  check_order(m);
  int result = m;
  for (int p = 2, n = m; n > 1; ++p) {
    if (p * p > n) p = n;
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  check_order(m);
  static std::mutex mu;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  if (p.size() != static_cast<std::size_t>(euler_phi(m)) + 1)
    throw std::logic_error("cyclotomic polynomial has wrong degree");
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(p)).first->second;
}

CycloNum::CycloNum(int order, const Rational& c)
    : order_(order), coeffs_(RationalVector::Zero(euler_phi(order))) {
  coeffs_(0) = c;
}

CycloNum CycloNum::from_polynomial(int order, const std::vector<Rational>& poly) {
  check_order(order);
  return {order, reduce(order, poly)};
}

CycloNum CycloNum::zeta_power(int order, std::int64_t e) {
  check_order(order);
  e %= order;
  if (e < 0) e += order;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly.back() = 1;
  return from_polynomial(order, poly);
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  same_order(a, b);
  return {a.order_, RationalVector(a.coeffs_ + b.coeffs_)};
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
  same_order(a, b);
  return {a.order_, RationalVector(a.coeffs_ - b.coeffs_)};
}

CycloNum CycloNum::operator-() const { return {order_, RationalVector(-coeffs_)}; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  same_order(a, b);
  const Eigen::Index t = a.coeffs_.size();
  std::vector<Rational> prod(static_cast<std::size_t>(2 * t - 1), Rational(0));
  for (Eigen::Index i = 0; i < t; ++i) {
    if (a.coeffs_(i) == 0) continue;
    for (Eigen::Index j = 0; j < t; ++j)
      if (b.coeffs_(j) != 0) prod[static_cast<std::size_t>(i + j)] += a.coeffs_(i) * b.coeffs_(j);
  }
  return {a.order_, reduce(a.order_, std::move(prod))};
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  same_order(a, b);
  return a.coeffs_ == b.coeffs_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  // Column j of the multiplication-by-this matrix is this * z^j.
  const Eigen::Index t = coeffs_.size();
  RationalMatrix mul(t, t);
  for (Eigen::Index j = 0; j < t; ++j) mul.col(j) = (*this * zeta_power(order_, j)).coeffs_;
  RationalVector unit = RationalVector::Zero(t);
  unit(0) = 1;
  auto x = solve_exact(mul, unit);
  if (!x) throw std::logic_error("singular multiplication matrix for a nonzero field element");
  return {order_, std::move(*x)};
}

CycloNum cyc_mul(const CycloNum& a, const CycloNum& b) { return a * b; }
CycloNum cyc_inv(const CycloNum& a) { return a.inverse(); }

CycloNum pow(const CycloNum& a, std::int64_t e) {
  CycloNum base = e < 0 ? a.inverse() : a;
  if (e < 0) e = -e;
  CycloNum result(a.order(), Rational(1));
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string to_string(const CycloNum& a) {
  std::string out;
  for (Eigen::Index i = 0; i < a.coeffs().size(); ++i) {
    if (i) out += '+';
    out += to_string(a.coeffs()(i));
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out;
}

CycloNum parse_cyclo(int order, std::string_view text) {
  std::vector<Rational> poly;
  const auto fail = [&] { return std::invalid_argument("malformed cyclotomic number: '" + std::string(text) + "'"); };
  std::size_t expected = 0;
  while (true) {
    const auto plus = text.find('+');
    std::string_view term = text.substr(0, plus);
    std::string_view coeff = term;
    std::size_t power = 0;
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      coeff = term.substr(0, star);
      const std::string_view mono = term.substr(star + 1);
      if (mono == "z") {
        power = 1;
      } else if (mono.size() > 2 && mono.substr(0, 2) == "z^") {
        power = std::stoul(std::string(mono.substr(2)));
      } else {
        throw fail();
      }
    }
    if (power != expected) throw fail();
    poly.push_back(parse_rational(coeff));
    ++expected;
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  if (poly.size() != static_cast<std::size_t>(euler_phi(order))) throw fail();
  return CycloNum::from_polynomial(order, poly);
}

ProjPoint::ProjPoint(CycloNum x, CycloNum y, CycloNum z) : coords{std::move(x), std::move(y), std::move(z)} {
  if (coords[0].order() != coords[1].order() || coords[0].order() != coords[2].order())
    throw OrderMismatch("projective point with mixed cyclotomic orders");
  if (coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero())
    throw std::invalid_argument("projective point with all coordinates zero");
}

ProjPoint ProjPoint::scaled(const CycloNum& c) const {
  return {coords[0] * c, coords[1] * c, coords[2] * c};
}

CycloNum det3(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (p.order() != q.order() || p.order() != r.order())
    throw OrderMismatch("det3 over points of different cyclotomic orders");
  const auto& a = p.coords;
  const auto& b = q.coords;
  const auto& c = r.coords;
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace negcurve
