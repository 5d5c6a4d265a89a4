#pragma once

#include <string>
#include <vector>

#include "kgsymm/opalg/operator_expr.hpp"

namespace kgsymm::opalg {

/// Unevaluated sum/product tree over the atoms {x1, x2, p1, p2, r^s, scalar}.
/// Products keep their written order; canonicalize() normal-orders them.
class ExprTree {
 public:
  enum class Kind { X1, X2, P1, P2, RPow, Scalar, Sum, Product };

  static ExprTree x1() { return ExprTree(Kind::X1); }
  static ExprTree x2() { return ExprTree(Kind::X2); }
  static ExprTree p1() { return ExprTree(Kind::P1); }
  static ExprTree p2() { return ExprTree(Kind::P2); }
  static ExprTree r_pow(int s);
  static ExprTree scalar(Coeff c);
  static ExprTree sum(std::vector<ExprTree> terms);
  static ExprTree product(std::vector<ExprTree> factors);

  friend ExprTree operator+(ExprTree a, ExprTree b) { return sum({std::move(a), std::move(b)}); }
  friend ExprTree operator*(ExprTree a, ExprTree b) { return product({std::move(a), std::move(b)}); }

  Kind kind() const { return kind_; }
  const std::vector<ExprTree>& children() const { return children_; }
  std::string to_string() const;

  friend OperatorExpr canonicalize(const ExprTree& t);

 private:
  explicit ExprTree(Kind k) : kind_(k) {}
  Kind kind_;
  int power_ = 0;
  Coeff scalar_;
  std::vector<ExprTree> children_;
};

OperatorExpr canonicalize(const ExprTree& t);

}  // namespace kgsymm::opalg
