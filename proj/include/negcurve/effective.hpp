#pragma once

// Effectivity of dH - sum k_i E_i for configurations with coordinates: the
// space of degree-d forms vanishing to order k_i at each point.
//
// A form has multiplicity >= k at a point iff all its partial derivatives of
// order k-1 vanish there (Euler's relation), so each step adds k(k+1)/2 rows.

#include "negcurve/configs.hpp"
#include "negcurve/cyclo.hpp"
#include "negcurve/lattice.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace negcurve {

/// Exponent triples (a, b, c) with a + b + c = d, a descending, then b.
std::vector<std::array<int, 3>> monomials(int d);

using Form = std::vector<CycloNum>;  // coefficients in monomials(d) order

/// Basis of the degree-d forms with the prescribed multiplicities, computed
/// exactly over Q(zeta). Negative multiplicities impose nothing.
std::vector<Form> sections_basis_exact(const Configuration& cfg, const DivisorClass& c);

std::size_t sections_exact(const Configuration& cfg, const DivisorClass& c);

/// True when every partial derivative of the given order vanishes at the point.
bool partials_vanish_exact(const Configuration& cfg, const Form& f, int degree, int point, int order);

/// Number of conditions k(k+1)/2 summed over the points; the section space
/// has dimension at least (d+1)(d+2)/2 minus this.
std::int64_t condition_count(const DivisorClass& c);

/// The same space reduced modulo a prime p = 1 (mod order) through
/// zeta -> omega. The rank can only drop mod p, so a zero space mod p
/// certifies that the class is not effective.
class ModularSections {
 public:
  using Vector = std::vector<std::uint64_t>;
  using Basis = std::vector<Vector>;

  ModularSections(const Configuration& cfg, int degree);

  std::uint64_t prime() const { return p_; }
  int degree() const { return d_; }

  /// All forms of the degree.
  Basis full() const;

  /// Intersects the span with {F : all order-`order` partials vanish at the point}.
  void restrict(Basis& basis, int point, int order) const;

  std::size_t dimension(const DivisorClass& c) const;

  bool partials_vanish(const Vector& form, int point, int order) const;

 private:
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t dot(const Vector& a, const Vector& b) const;
  std::uint64_t power(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inverse(std::uint64_t a) const { return power(a, p_ - 2); }

  Vector condition_row(int point, const std::array<int, 3>& alpha) const;

  std::uint64_t p_ = 0;
  int d_ = 0;
  std::vector<std::array<int, 3>> monomials_;
  // powers_[i][axis][e] = coordinate^e at point i, with 0^0 = 1
  std::vector<std::array<Vector, 3>> powers_;
  std::vector<std::uint64_t> factorial_;
  std::vector<std::uint64_t> inv_factorial_;
};

}  // namespace negcurve
