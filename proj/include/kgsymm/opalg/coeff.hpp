#pragma once

// Exact scalars of the operator algebra.
//
// GaussRational is a + b i with rational a, b. Coeff is a ratio of two
// Laurent polynomials in the formal parameters {m_eff, k, omega_eff,
// lambda} with GaussRational coefficients. Whenever the denominator is a
// single monomial it is folded into the numerator, so the coefficients
// that arise from the generators (all of whose denominators are
// monomials) are stored as plain Laurent polynomials with denominator 1.

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgsymm::opalg {

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im = 0);

  static GaussRational i() { return {0, 1}; }
  static GaussRational frac(long num, long den) { return {mpq_class(num, den)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  GaussRational conj() const { return {re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);
  GaussRational operator-() const { return {-re_, -im_}; }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/2", "-1/4*i", "1/2-3*i".
  std::string to_string() const;
  static GaussRational parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

enum class Param : std::uint8_t { MassEff = 0, Coupling = 1, OmegaEff = 2, Curvature = 3 };
inline constexpr int kParamCount = 4;
/// Textual symbols used by the serializer: mt, k, wt, lam.
std::string_view param_symbol(Param p);

/// Numeric values for the formal parameters.
struct ParamValues {
  double m_eff = 1.0;
  double coupling = 1.0;
  double omega_eff = 1.0;
  double curvature = 0.0;
  double operator[](Param p) const;
};

using Exponents = std::array<std::int16_t, kParamCount>;

/// Sparse Laurent polynomial in the four parameters; terms sorted by exponent tuple.
class LaurentPoly {
 public:
  using Term = std::pair<Exponents, GaussRational>;

  LaurentPoly() = default;
  LaurentPoly(GaussRational c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(GaussRational c, Exponents e);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by c * params^e.
  LaurentPoly scaled(const GaussRational& c, const Exponents& e) const;
  LaurentPoly conj() const;
  std::complex<double> evaluate(const ParamValues& v) const;
  /// Quotient q with q * d == *this, when it exists.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(const Exponents& e, const GaussRational& c);
  std::vector<Term> terms_;
};

/// Rational function num/den over LaurentPoly.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : num_(GaussRational(v)) {}  // NOLINT(google-explicit-constructor)
  Coeff(GaussRational c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Coeff(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  Coeff(LaurentPoly num, LaurentPoly den);

  static Coeff i() { return GaussRational::i(); }
  static Coeff frac(long num, long den) { return GaussRational::frac(num, den); }
  /// A single formal parameter raised to `power` (negative allowed).
  static Coeff param(Param p, int power = 1);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);
  Coeff operator-() const;
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  /// a/b == c/d iff a*d - c*b expands to zero.
  friend bool operator==(const Coeff& a, const Coeff& b);

  Coeff conj() const;
  std::complex<double> evaluate(const ParamValues& v) const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;
  static Coeff parse(std::string_view text);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_{GaussRational(1)};
};

}  // namespace kgsymm::opalg
