#pragma once

// Picard lattice of the plane blown up at s points: classes (d; k_1..k_s)
// standing for dH - sum k_i E_i, with H^2 = 1, E_i^2 = -1, H.E_i = 0.

#include <Eigen/Core>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace negcurve {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LatticeContext {
  int s = 1;

  explicit LatticeContext(int points) : s(points) {
    if (points < 1) throw std::invalid_argument("lattice context needs s >= 1");
  }
};

template <typename Int>
struct DivisorClassT {
  using Scalar = Int;
  using Mults = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

  Int degree{};
  Mults mults;

  DivisorClassT() = default;
  DivisorClassT(Int d, Mults k) : degree(d), mults(std::move(k)) {}
  DivisorClassT(Int d, std::initializer_list<Int> k) : degree(d), mults(static_cast<Eigen::Index>(k.size())) {
    std::copy(k.begin(), k.end(), mults.data());
  }

  /// The zero class of the given context.
  explicit DivisorClassT(const LatticeContext& ctx) : degree(0), mults(Mults::Zero(ctx.s)) {}

  int points() const { return static_cast<int>(mults.size()); }

  friend bool operator==(const DivisorClassT& a, const DivisorClassT& b) {
    return a.degree == b.degree && a.mults.size() == b.mults.size() && a.mults == b.mults;
  }
  friend bool operator!=(const DivisorClassT& a, const DivisorClassT& b) { return !(a == b); }

  /// Degree first, then multiplicities lexicographically.
  friend bool operator<(const DivisorClassT& a, const DivisorClassT& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.mults.size() != b.mults.size()) return a.mults.size() < b.mults.size();
    return std::lexicographical_compare(a.mults.begin(), a.mults.end(), b.mults.begin(), b.mults.end());
  }

  friend DivisorClassT operator+(const DivisorClassT& a, const DivisorClassT& b) {
    if (a.points() != b.points()) throw DimensionError("divisor classes from different lattices");
    return {a.degree + b.degree, a.mults + b.mults};
  }
  friend DivisorClassT operator-(const DivisorClassT& a, const DivisorClassT& b) {
    if (a.points() != b.points()) throw DimensionError("divisor classes from different lattices");
    return {a.degree - b.degree, a.mults - b.mults};
  }
  friend DivisorClassT operator*(Int c, const DivisorClassT& a) { return {c * a.degree, c * a.mults}; }
};

using DivisorClass = DivisorClassT<std::int64_t>;

enum class NegativeType { MinusOne, MinusTwo, OtherNegative, NonNegative };

inline const char* to_string(NegativeType t) {
  switch (t) {
    case NegativeType::MinusOne: return "minus_one";
    case NegativeType::MinusTwo: return "minus_two";
    case NegativeType::OtherNegative: return "other_negative";
    case NegativeType::NonNegative: return "non_negative";
  }
  return "?";
}

template <typename Int>
Int intersection_number(const DivisorClassT<Int>& a, const DivisorClassT<Int>& b) {
  if (a.points() != b.points())
    throw DimensionError("intersection of classes with " + std::to_string(a.points()) + " and " +
                         std::to_string(b.points()) + " points");
  return a.degree * b.degree - a.mults.dot(b.mults);
}

template <typename Int>
Int self_intersection(const DivisorClassT<Int>& c) {
  return intersection_number(c, c);
}

/// K = -3H + sum E_i, i.e. (-3; -1, ..., -1).
template <typename Int = std::int64_t>
DivisorClassT<Int> canonical(const LatticeContext& ctx) {
  return {Int(-3), DivisorClassT<Int>::Mults::Constant(ctx.s, Int(-1))};
}

template <typename Int>
Int canonical_degree(const DivisorClassT<Int>& c) {
  return intersection_number(c, canonical<Int>(LatticeContext(c.points())));
}

/// 1 + (c^2 + c.K) / 2; the bracket is even for every integral class.
template <typename Int>
Int arithmetic_genus(const DivisorClassT<Int>& c) {
  return Int(1) + (self_intersection(c) + canonical_degree(c)) / 2;
}

/// E_i as the class (0; ..., -1 at i, ...); `index` is 0-based.
template <typename Int = std::int64_t>
DivisorClassT<Int> exceptional(const LatticeContext& ctx, int index) {
  if (index < 0 || index >= ctx.s) throw DimensionError("exceptional index out of range");
  DivisorClassT<Int> e(ctx);
  e.mults(index) = Int(-1);
  return e;
}

/// Returns the 0-based index i when c equals E_i, otherwise -1.
template <typename Int>
int exceptional_index(const DivisorClassT<Int>& c) {
  if (c.degree != 0) return -1;
  int hit = -1;
  for (int i = 0; i < c.points(); ++i) {
    if (c.mults(i) == 0) continue;
    if (c.mults(i) != -1 || hit >= 0) return -1;
    hit = i;
  }
  return hit;
}

/// (1; 1 at each listed point); indices 0-based.
template <typename Int = std::int64_t>
DivisorClassT<Int> line_through(const LatticeContext& ctx, const std::vector<int>& points) {
  DivisorClassT<Int> l(ctx);
  l.degree = 1;
  for (int p : points) {
    if (p < 0 || p >= ctx.s) throw DimensionError("line point index out of range");
    l.mults(p) = 1;
  }
  return l;
}

template <typename Int>
NegativeType classify_negative_type(const DivisorClassT<Int>& c) {
  const Int sq = self_intersection(c);
  if (sq >= 0) return NegativeType::NonNegative;
  const Int ck = canonical_degree(c);
  if (sq == -1 && ck == -1) return NegativeType::MinusOne;
  if (sq == -2 && ck == 0) return NegativeType::MinusTwo;
  return NegativeType::OtherNegative;
}

/// Text form "d;k1,k2,...,ks".
template <typename Int>
std::string to_string(const DivisorClassT<Int>& c) {
  std::string out = std::to_string(c.degree) + ";";
  for (Eigen::Index i = 0; i < c.mults.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.mults(i));
  }
  return out;
}

inline DivisorClass parse_divisor_class(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("malformed divisor class: '" + std::string(text) + "'"); };
  const auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw bad();
    return v;
  };
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw bad();
  DivisorClass c;
  c.degree = parse_int(text.substr(0, semi));
  std::vector<std::int64_t> ks;
  std::string_view rest = text.substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    ks.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  c.mults = Eigen::Map<DivisorClass::Mults>(ks.data(), static_cast<Eigen::Index>(ks.size()));
  return c;
}

}  // namespace negcurve
