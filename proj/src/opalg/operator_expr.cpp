#include "kgsymm/opalg/operator_expr.hpp"

#include <algorithm>
#include <tuple>

#include "kgsymm/error.hpp"

namespace kgsymm::opalg {

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (-i)^n
GaussRational minus_i_pow(int n) {
  switch (n % 4) {
    case 0: return 1;
    case 1: return {0, -1};
    case 2: return -1;
    default: return {0, 1};
  }
}

}  // namespace

OperatorExpr OperatorExpr::scalar(Coeff c) { return radial(RadialFunction::constant(std::move(c))); }

OperatorExpr OperatorExpr::x(int axis) {
  if (axis != 1 && axis != 2) throw DomainError("position axis must be 1 or 2");
  return radial(RadialFunction::monomial(1, axis == 1 ? 1 : 0, axis == 2 ? 1 : 0, 0));
}

OperatorExpr OperatorExpr::p(int axis) {
  if (axis != 1 && axis != 2) throw DomainError("momentum axis must be 1 or 2");
  return radial(RadialFunction::constant(1), axis == 1 ? PMono{1, 0} : PMono{0, 1});
}

OperatorExpr OperatorExpr::r_pow(int s) { return radial(RadialFunction::monomial(1, 0, 0, s)); }

OperatorExpr OperatorExpr::radial(RadialFunction h, PMono momentum) {
  OperatorExpr out;
  h.reduce();
  out.add(momentum, h);
  return out;
}

void OperatorExpr::add(PMono key, const RadialFunction& h) {
  if (h.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, h);
    return;
  }
  it->second += h;
  if (it->second.is_zero()) terms_.erase(it);
}

int OperatorExpr::momentum_degree() const {
  int d = -1;
  for (const auto& [k, h] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

std::vector<TermView> OperatorExpr::terms() const {
  std::vector<TermView> out;
  for (const auto& [key, h] : terms_) {
    for (const auto& [m, c] : h.even().numer.terms())
      out.push_back({c, m.first, m.second, -2 * h.even().rho_power, key.first, key.second});
    for (const auto& [m, c] : h.odd().numer.terms())
      out.push_back({c, m.first, m.second, 1 - 2 * h.odd().rho_power, key.first, key.second});
  }
  auto rank = [](const TermView& t) {
    return std::make_tuple(t.p1 + t.p2, -t.p1, t.x1 + t.x2, -t.x1, t.r);
  };
  std::stable_sort(out.begin(), out.end(), [&](const TermView& a, const TermView& b) { return rank(a) < rank(b); });
  return out;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [k, h] : o.terms_) add(k, h);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [k, h] : o.terms_) add(k, -h);
  return *this;
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr r;
  for (const auto& [k, h] : terms_) r.terms_.emplace(k, -h);
  return r;
}

OperatorExpr operator*(const Coeff& c, const OperatorExpr& a) {
  OperatorExpr out;
  if (c.is_zero()) return out;
  for (const auto& [k, h] : a.terms_) out.add(k, h.scaled(c));
  return out;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  if (a.is_zero() || b.is_zero()) return out;
  int max_a = 0;
  int max_b = 0;
  for (const auto& [k, h] : a.terms_) {
    max_a = std::max(max_a, k.first);
    max_b = std::max(max_b, k.second);
  }
  for (const auto& [k2, h2] : b.terms_) {
    // derivs[j][l] = d1^j d2^l h2
    std::vector<std::vector<RadialFunction>> derivs(max_a + 1, std::vector<RadialFunction>(max_b + 1));
    derivs[0][0] = h2;
    for (int j = 0; j <= max_a; ++j) {
      if (j > 0) derivs[j][0] = derivs[j - 1][0].derivative(0);
      for (int l = 1; l <= max_b; ++l) derivs[j][l] = derivs[j][l - 1].derivative(1);
    }
    for (const auto& [k1, h1] : a.terms_) {
      for (int j = 0; j <= k1.first; ++j) {
        for (int l = 0; l <= k1.second; ++l) {
          const RadialFunction& d = derivs[j][l];
          if (d.is_zero()) continue;
          const Coeff c(GaussRational(binomial(k1.first, j) * binomial(k1.second, l)) * minus_i_pow(j + l));
          RadialFunction prod = h1 * d;
          if (!c.is_one()) prod = prod.scaled(c);
          out.add({k1.first - j + k2.first, k1.second - l + k2.second}, prod);
        }
      }
    }
  }
  return out;
}

OperatorExpr OperatorExpr::pow(int n) const {
  if (n < 0) throw DomainError("negative operator power");
  OperatorExpr out = one();
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

OperatorExpr canonicalize(const OperatorExpr& x) {
  OperatorExpr out;
  for (const auto& [k, h] : x.components()) out += OperatorExpr::radial(h, k);
  return out;
}

OperatorExpr bracket(BracketKind kind, const OperatorExpr& a, const OperatorExpr& b) {
  return kind == BracketKind::Commutator ? a * b - b * a : a * b + b * a;
}

OperatorExpr adjoint(const OperatorExpr& x) {
  OperatorExpr out;
  for (const auto& [k, h] : x.components())
    out += OperatorExpr::radial(RadialFunction::constant(1), k) * OperatorExpr::radial(h.conj());
  return out;
}

Residual verify_identity(const OperatorExpr& lhs, const OperatorExpr& rhs) {
  OperatorExpr r = canonicalize(lhs - rhs);
  const bool zero = r.is_zero();
  return {std::move(r), zero};
}

}  // namespace kgsymm::opalg
