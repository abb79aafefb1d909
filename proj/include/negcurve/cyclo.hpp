#pragma once

// Exact arithmetic in Q(zeta_m). An element is stored as its unique residue
// modulo the m-th cyclotomic polynomial: phi(m) rational coefficients of
// 1, z, ..., z^{phi(m)-1}.

#include "negcurve/rational.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace negcurve {

struct OrderMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int euler_phi(int m);

/// Coefficients of Phi_m, lowest degree first; cached, thread-safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

class CycloNum {
 public:
  CycloNum() = default;
  /// The rational constant c in Q(zeta_m).
  CycloNum(int order, const Rational& c);
  /// Reduces an arbitrary polynomial in z (lowest degree first).
  static CycloNum from_polynomial(int order, const std::vector<Rational>& poly);
  /// zeta_m^e for any integer e.
  static CycloNum zeta_power(int order, std::int64_t e);

  int order() const { return order_; }
  const RationalVector& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloNum inverse() const;

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }
  CycloNum operator-() const;
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

 private:
  CycloNum(int order, RationalVector coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  int order_ = 1;
  RationalVector coeffs_ = RationalVector::Zero(1);
};

CycloNum cyc_mul(const CycloNum& a, const CycloNum& b);
/// Throws std::domain_error for zero.
CycloNum cyc_inv(const CycloNum& a);
CycloNum pow(const CycloNum& a, std::int64_t e);

/// "c0+c1*z+...+c{t-1}*z^{t-1}", every coefficient as "p/q".
std::string to_string(const CycloNum& a);
CycloNum parse_cyclo(int order, std::string_view text);

struct ProjPoint {
  std::array<CycloNum, 3> coords;

  ProjPoint(CycloNum x, CycloNum y, CycloNum z);
  int order() const { return coords[0].order(); }
  ProjPoint scaled(const CycloNum& c) const;
};

/// Determinant of the 3x3 coordinate matrix; zero iff the points are collinear.
CycloNum det3(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

inline bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return det3(p, q, r).is_zero();
}

}  // namespace negcurve
