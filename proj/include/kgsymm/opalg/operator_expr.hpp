#pragma once

// Canonical elements of the extended 2D Weyl algebra.
//
// An OperatorExpr is a finite sum  sum_{a,b} h_{ab}(x) p1^a p2^b  with all
// momenta to the right (normal order) and each h_{ab} a RadialFunction in
// normal form. Products are normal-ordered with the Leibniz rule
//
//   p1^a p2^b h = sum_{j,l} C(a,j) C(b,l) (-i)^(j+l) (d1^j d2^l h) p1^(a-j) p2^(b-l),
//
// which follows from [p_i, h] = -i dh/dx_i. Every value returned by the
// public interface is canonical, so two expressions are equal exactly when
// their difference has no terms.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kgsymm/opalg/coeff.hpp"
#include "kgsymm/opalg/radial.hpp"

namespace kgsymm::opalg {

/// Exponents (a, b) of p1^a p2^b.
using PMono = std::pair<int, int>;

/// One printed term: coeff * x1^a x2^b r^s * p1^alpha p2^beta.
struct TermView {
  Coeff coeff;
  int x1 = 0;
  int x2 = 0;
  int r = 0;
  int p1 = 0;
  int p2 = 0;
};

class OperatorExpr {
 public:
  OperatorExpr() = default;

  static OperatorExpr scalar(Coeff c);
  static OperatorExpr one() { return scalar(1); }
  /// Position x_axis, axis in {1, 2}.
  static OperatorExpr x(int axis);
  /// Momentum p_axis = -i d/dx_axis, axis in {1, 2}.
  static OperatorExpr p(int axis);
  /// r^s for any integer s.
  static OperatorExpr r_pow(int s);
  static OperatorExpr radial(RadialFunction h, PMono momentum = {0, 0});

  bool is_zero() const { return terms_.empty(); }
  const std::map<PMono, RadialFunction>& components() const { return terms_; }
  /// Highest total momentum degree (-1 for zero).
  int momentum_degree() const;
  /// Flattened terms in deterministic order: momentum degree, p1 power
  /// (descending), then x-degree, x1 power (descending), r power.
  std::vector<TermView> terms() const;
  std::size_t term_count() const { return terms().size(); }

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr operator-() const;
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const Coeff& c, const OperatorExpr& a);
  friend OperatorExpr operator*(const OperatorExpr& a, const Coeff& c) { return c * a; }
  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) { return (a - b).is_zero(); }

  OperatorExpr pow(int n) const;

 private:
  void add(PMono key, const RadialFunction& h);
  std::map<PMono, RadialFunction> terms_;
};

/// Restores the normal form; idempotent on canonical input.
OperatorExpr canonicalize(const OperatorExpr& x);

enum class BracketKind { Commutator, Anticommutator };

/// AB - BA or AB + BA, canonical.
OperatorExpr bracket(BracketKind kind, const OperatorExpr& a, const OperatorExpr& b);
inline OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
  return bracket(BracketKind::Commutator, a, b);
}
inline OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
  return bracket(BracketKind::Anticommutator, a, b);
}

/// Formal adjoint: x_i, p_i, r^s self-adjoint, i -> -i, (AB)^+ = B^+ A^+.
OperatorExpr adjoint(const OperatorExpr& x);

struct Residual {
  OperatorExpr expr;
  bool is_zero;
};

/// canonicalize(lhs - rhs) and whether it vanishes identically.
Residual verify_identity(const OperatorExpr& lhs, const OperatorExpr& rhs);

}  // namespace kgsymm::opalg
