#include "kgsymm/opalg/expr_tree.hpp"

namespace kgsymm::opalg {

ExprTree ExprTree::r_pow(int s) {
  ExprTree t(Kind::RPow);
  t.power_ = s;
  return t;
}

ExprTree ExprTree::scalar(Coeff c) {
  ExprTree t(Kind::Scalar);
  t.scalar_ = std::move(c);
  return t;
}

ExprTree ExprTree::sum(std::vector<ExprTree> terms) {
  ExprTree t(Kind::Sum);
  t.children_ = std::move(terms);
  return t;
}

ExprTree ExprTree::product(std::vector<ExprTree> factors) {
  ExprTree t(Kind::Product);
  t.children_ = std::move(factors);
  return t;
}

std::string ExprTree::to_string() const {
  switch (kind_) {
    case Kind::X1: return "x1";
    case Kind::X2: return "x2";
    case Kind::P1: return "p1";
    case Kind::P2: return "p2";
    case Kind::RPow: return "r^" + std::to_string(power_);
    case Kind::Scalar: return "{" + scalar_.to_string() + "}";
    case Kind::Sum:
    case Kind::Product: {
      std::string s = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += kind_ == Kind::Sum ? " + " : " ";
        s += children_[i].to_string();
      }
      return s + ")";
    }
  }
  return {};
}

OperatorExpr canonicalize(const ExprTree& t) {
  switch (t.kind_) {
    case ExprTree::Kind::X1: return OperatorExpr::x(1);
    case ExprTree::Kind::X2: return OperatorExpr::x(2);
    case ExprTree::Kind::P1: return OperatorExpr::p(1);
    case ExprTree::Kind::P2: return OperatorExpr::p(2);
    case ExprTree::Kind::RPow: return OperatorExpr::r_pow(t.power_);
    case ExprTree::Kind::Scalar: return OperatorExpr::scalar(t.scalar_);
    case ExprTree::Kind::Sum: {
      OperatorExpr out;
      for (const auto& c : t.children_) out += canonicalize(c);
      return out;
    }
    case ExprTree::Kind::Product: {
      OperatorExpr out = OperatorExpr::one();
      for (const auto& c : t.children_) out = out * canonicalize(c);
      return out;
    }
  }
  return {};
}

}  // namespace kgsymm::opalg
