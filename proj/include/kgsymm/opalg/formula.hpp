#pragma once

#include <string>
#include <vector>

#include "kgsymm/opalg/operator_expr.hpp"

namespace kgsymm::opalg {

/// weight * factors[0] * factors[1] * ... ; the last factor acts first.
struct Chain {
  Coeff weight;
  std::vector<OperatorExpr> factors;
};

/// A sum of unexpanded operator products.
///
/// The symbolic route expands it into one canonical OperatorExpr; the
/// numerical oracle applies each chain factor by factor to a sampled field
/// and never sees the expanded form.
class Formula {
 public:
  Formula() = default;
  Formula(OperatorExpr op);  // NOLINT(google-explicit-constructor)
  static Formula scalar(Coeff c);

  const std::vector<Chain>& chains() const { return chains_; }
  OperatorExpr expand() const;

  Formula& operator+=(const Formula& o);
  Formula& operator-=(const Formula& o);
  friend Formula operator+(Formula a, const Formula& b) { return a += b; }
  friend Formula operator-(Formula a, const Formula& b) { return a -= b; }
  friend Formula operator*(const Formula& a, const Formula& b);
  friend Formula operator*(const Coeff& c, const Formula& f);

 private:
  std::vector<Chain> chains_;
};

Formula commutator(const Formula& a, const Formula& b);
Formula anticommutator(const Formula& a, const Formula& b);

}  // namespace kgsymm::opalg
