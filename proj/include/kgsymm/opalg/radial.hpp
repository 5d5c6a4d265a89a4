#pragma once

// Multiplication operators built from x1, x2 and integer powers of r.
//
// The subring of functions generated by x1, x2, r and 1/r (with r^2 = rho
// := x1^2 + x2^2) has the unique normal form
//
//     f + g r,   f = F / rho^a,   g = G / rho^b,
//
// where F, G are polynomials in x1, x2 and neither numerator is divisible
// by rho unless its exponent is zero.

#include <complex>
#include <utility>
#include <vector>

#include "kgsymm/opalg/coeff.hpp"

namespace kgsymm::opalg {

/// Exponents (a, b) of x1^a x2^b.
using XMono = std::pair<int, int>;

/// Sparse polynomial in x1, x2 with Coeff coefficients, sorted by monomial.
class XPoly {
 public:
  using Term = std::pair<XMono, Coeff>;

  XPoly() = default;
  static XPoly monomial(Coeff c, XMono m);
  static XPoly rho();

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  XPoly& operator+=(const XPoly& o);
  XPoly operator-() const;
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly scaled(const Coeff& c) const;
  /// Multiply by x1^dm.first x2^dm.second.
  XPoly shifted(XMono dm) const;
  XPoly derivative(int axis) const;
  XPoly conj() const;
  /// Exact division by rho when possible.
  bool divide_by_rho(XPoly& quotient) const;

  friend bool operator==(const XPoly& a, const XPoly& b);

 private:
  static XPoly from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

/// numer / rho^rho_power.
struct RhoFraction {
  XPoly numer;
  int rho_power = 0;

  bool is_zero() const { return numer.is_zero(); }
  void reduce();
  /// Rewrites the fraction with denominator rho^power (power >= rho_power).
  XPoly numer_at(int power) const;
  RhoFraction derivative(int axis) const;
  friend RhoFraction operator*(const RhoFraction& a, const RhoFraction& b);
  friend RhoFraction operator+(const RhoFraction& a, const RhoFraction& b);
};

class RadialFunction {
 public:
  RadialFunction() = default;
  RadialFunction(RhoFraction f, RhoFraction g);

  static RadialFunction constant(Coeff c);
  /// c * x1^a x2^b r^s for any integer s.
  static RadialFunction monomial(Coeff c, int a, int b, int s);

  /// Part without r.
  const RhoFraction& even() const { return f_; }
  /// Coefficient of r.
  const RhoFraction& odd() const { return g_; }

  bool is_zero() const { return f_.is_zero() && g_.is_zero(); }

  RadialFunction& operator+=(const RadialFunction& o);
  RadialFunction operator-() const;
  friend RadialFunction operator+(RadialFunction a, const RadialFunction& b) { return a += b; }
  friend RadialFunction operator*(const RadialFunction& a, const RadialFunction& b);
  RadialFunction scaled(const Coeff& c) const;
  /// d/dx_axis, axis in {0, 1}; uses dr/dx_i = x_i / r.
  RadialFunction derivative(int axis) const;
  RadialFunction conj() const;

  /// Restores the normal form (strips rho factors from numerators).
  void reduce();

  std::complex<double> evaluate(double x1, double x2, const ParamValues& v) const;

 private:
  RhoFraction f_;
  RhoFraction g_;
};

}  // namespace kgsymm::opalg
