#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nilrep/int_matrix.hpp"

namespace nilrep {

/// Dense polynomial in t with arbitrary-precision integer coefficients;
/// index = degree. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class GradedPoly {
public:
  GradedPoly() = default;
  GradedPoly(std::initializer_list<long> coefficients);
  explicit GradedPoly(std::vector<Integer> coefficients);

  static GradedPoly constant(const Integer &c);
  /// c * t^degree
  static GradedPoly monomial(std::size_t degree, const Integer &c = 1);

  const std::vector<Integer> &coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Integer coefficient(std::size_t d) const { return d < c_.size() ? c_[d] : Integer(0); }
  Integer evaluate(const Integer &t) const;

  /// p(t) -> p(t^k)
  GradedPoly substitute_power(std::size_t k) const;
  GradedPoly pow(std::size_t e) const;
  /// Exact quotient; throws InexactDivision when the remainder is non-zero.
  GradedPoly divide_exact(const GradedPoly &divisor) const;
  /// Exact coefficient-wise division by an integer.
  GradedPoly divide_exact(const Integer &divisor) const;

  bool has_nonnegative_coefficients() const;
  /// Human form, e.g. "1 + t^2 + 2t^3".
  std::string to_string() const;

  GradedPoly &operator+=(const GradedPoly &o);
  GradedPoly &operator-=(const GradedPoly &o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly &b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly &b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly &a, const GradedPoly &b);
  friend GradedPoly operator*(GradedPoly a, const Integer &s);
  friend bool operator==(const GradedPoly &, const GradedPoly &) = default;

private:
  void trim();
  std::vector<Integer> c_;
};

/// numerator / denominator with a positive integer denominator. Only used
/// while accumulating group averages.
class RationalPoly {
public:
  RationalPoly() = default;
  RationalPoly(GradedPoly numerator, Integer denominator);

  const GradedPoly &numerator() const noexcept { return num_; }
  const Integer &denominator() const noexcept { return den_; }

  RationalPoly &operator+=(const GradedPoly &p);
  /// Throws InexactDivision unless every coefficient clears.
  GradedPoly to_integer_poly() const;

private:
  GradedPoly num_;
  Integer den_ = 1;
};

using PolyMatrix = std::vector<std::vector<GradedPoly>>;

/// Exact determinant over Z[t] by fraction-free elimination.
GradedPoly determinant(PolyMatrix m);

std::ostream &operator<<(std::ostream &os, const GradedPoly &p);

} // namespace nilrep
