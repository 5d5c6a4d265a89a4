#include "kgsymm/opalg/formula.hpp"

namespace kgsymm::opalg {

Formula::Formula(OperatorExpr op) { chains_.push_back({Coeff(1), {std::move(op)}}); }

Formula Formula::scalar(Coeff c) {
  Formula f;
  if (!c.is_zero()) f.chains_.push_back({std::move(c), {}});
  return f;
}

OperatorExpr Formula::expand() const {
  OperatorExpr out;
  for (const auto& ch : chains_) {
    OperatorExpr prod = OperatorExpr::scalar(ch.weight);
    for (const auto& f : ch.factors) prod = prod * f;
    out += prod;
  }
  return out;
}

Formula& Formula::operator+=(const Formula& o) {
  chains_.insert(chains_.end(), o.chains_.begin(), o.chains_.end());
  return *this;
}

Formula& Formula::operator-=(const Formula& o) { return *this += Coeff(-1) * o; }

Formula operator*(const Formula& a, const Formula& b) {
  Formula out;
  for (const auto& ca : a.chains_)
    for (const auto& cb : b.chains_) {
      Chain c{ca.weight * cb.weight, ca.factors};
      c.factors.insert(c.factors.end(), cb.factors.begin(), cb.factors.end());
      out.chains_.push_back(std::move(c));
    }
  return out;
}

Formula operator*(const Coeff& c, const Formula& f) {
  Formula out = f;
  for (auto& ch : out.chains_) ch.weight *= c;
  return out;
}

Formula commutator(const Formula& a, const Formula& b) { return a * b - b * a; }
Formula anticommutator(const Formula& a, const Formula& b) { return a * b + b * a; }

}  // namespace kgsymm::opalg
