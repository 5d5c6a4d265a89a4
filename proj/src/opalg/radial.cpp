#include "kgsymm/opalg/radial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace kgsymm::opalg {

// ---------------------------------------------------------------- XPoly

XPoly XPoly::monomial(Coeff c, XMono m) {
  XPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

XPoly XPoly::rho() {
  XPoly p;
  p.terms_ = {{{0, 2}, Coeff(1)}, {{2, 0}, Coeff(1)}};
  return p;
}

XPoly XPoly::from_unsorted(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  XPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      continue;
    }
    if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
    out.terms_.push_back(std::move(t));
  }
  if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
  return out;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Coeff c = std::move(a->second);
      c += b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<XPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      prods.emplace_back(XMono{ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return XPoly::from_unsorted(std::move(prods));
}

XPoly XPoly::scaled(const Coeff& c) const {
  if (c.is_zero()) return {};
  XPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

XPoly XPoly::shifted(XMono dm) const {
  XPoly r = *this;
  for (auto& t : r.terms_) {
    t.first.first += dm.first;
    t.first.second += dm.second;
  }
  return r;
}

XPoly XPoly::derivative(int axis) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const int e = axis == 0 ? m.first : m.second;
    if (e == 0) continue;
    XMono d = m;
    (axis == 0 ? d.first : d.second) -= 1;
    out.emplace_back(d, c * Coeff(e));
  }
  return from_unsorted(std::move(out));
}

XPoly XPoly::conj() const {
  XPoly r = *this;
  for (auto& t : r.terms_) t.second = t.second.conj();
  return r;
}

bool XPoly::divide_by_rho(XPoly& quotient) const {
  // Eliminate x2^b (b >= 2) top-down using x2^2 = rho - x1^2.
  std::map<std::pair<int, int>, Coeff, std::greater<>> work;  // key (b, a)
  for (const auto& [m, c] : terms_) work.emplace(std::make_pair(m.second, m.first), c);
  std::vector<Term> q;
  while (!work.empty()) {
    auto it = work.begin();
    const auto [b, a] = it->first;
    if (b < 2) break;
    Coeff c = std::move(it->second);
    work.erase(it);
    const std::pair<int, int> key{b - 2, a + 2};
    auto& slot = work[key];
    slot -= c;
    if (slot.is_zero()) work.erase(key);
    q.emplace_back(XMono{a, b - 2}, std::move(c));
  }
  if (!work.empty()) return false;
  quotient = from_unsorted(std::move(q));
  return true;
}

bool operator==(const XPoly& a, const XPoly& b) { return a.terms_ == b.terms_; }

// ---------------------------------------------------------------- RhoFraction

void RhoFraction::reduce() {
  if (numer.is_zero()) {
    rho_power = 0;
    return;
  }
  XPoly q;
  while (rho_power > 0 && numer.divide_by_rho(q)) {
    numer = std::move(q);
    --rho_power;
  }
}

XPoly RhoFraction::numer_at(int power) const {
  XPoly out = numer;
  for (int k = rho_power; k < power; ++k) out = out * XPoly::rho();
  return out;
}

RhoFraction RhoFraction::derivative(int axis) const {
  if (rho_power == 0) return {numer.derivative(axis), 0};
  // d(N/rho^d) = (rho dN - 2 d x_i N) / rho^(d+1)
  XPoly n = XPoly::rho() * numer.derivative(axis);
  n += numer.shifted(axis == 0 ? XMono{1, 0} : XMono{0, 1}).scaled(Coeff(-2 * rho_power));
  RhoFraction out{std::move(n), rho_power + 1};
  out.reduce();
  return out;
}

RhoFraction operator*(const RhoFraction& a, const RhoFraction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RhoFraction out{a.numer * b.numer, a.rho_power + b.rho_power};
  out.reduce();
  return out;
}

RhoFraction operator+(const RhoFraction& a, const RhoFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int p = std::max(a.rho_power, b.rho_power);
  XPoly n = a.numer_at(p);
  n += b.numer_at(p);
  RhoFraction out{std::move(n), p};
  out.reduce();
  return out;
}

// ---------------------------------------------------------------- RadialFunction

RadialFunction::RadialFunction(RhoFraction f, RhoFraction g) : f_(std::move(f)), g_(std::move(g)) {
  reduce();
}

RadialFunction RadialFunction::constant(Coeff c) { return {{XPoly::monomial(std::move(c), {0, 0}), 0}, {}}; }

RadialFunction RadialFunction::monomial(Coeff c, int a, int b, int s) {
  // r^s = rho^floor(s/2) * r^(s mod 2)
  const int odd = ((s % 2) + 2) % 2;
  const int half = (s - odd) / 2;
  XPoly n = XPoly::monomial(std::move(c), {a, b});
  for (int k = 0; k < half; ++k) n = n * XPoly::rho();
  RhoFraction part{std::move(n), half < 0 ? -half : 0};
  return odd ? RadialFunction({}, std::move(part)) : RadialFunction(std::move(part), {});
}

void RadialFunction::reduce() {
  f_.reduce();
  g_.reduce();
}

RadialFunction& RadialFunction::operator+=(const RadialFunction& o) {
  f_ = f_ + o.f_;
  g_ = g_ + o.g_;
  return *this;
}

RadialFunction RadialFunction::operator-() const {
  RadialFunction r = *this;
  r.f_.numer = -r.f_.numer;
  r.g_.numer = -r.g_.numer;
  return r;
}

RadialFunction operator*(const RadialFunction& a, const RadialFunction& b) {
  // (f1 + g1 r)(f2 + g2 r) = (f1 f2 + g1 g2 rho) + (f1 g2 + g1 f2) r
  RhoFraction gg = a.g_ * b.g_;
  if (!gg.is_zero()) {
    if (gg.rho_power > 0)
      --gg.rho_power;
    else
      gg.numer = gg.numer * XPoly::rho();
  }
  RadialFunction out;
  out.f_ = (a.f_ * b.f_) + gg;
  out.g_ = (a.f_ * b.g_) + (a.g_ * b.f_);
  return out;
}

RadialFunction RadialFunction::scaled(const Coeff& c) const {
  RadialFunction r;
  r.f_ = {f_.numer.scaled(c), f_.rho_power};
  r.g_ = {g_.numer.scaled(c), g_.rho_power};
  r.reduce();
  return r;
}

RadialFunction RadialFunction::derivative(int axis) const {
  RadialFunction out;
  out.f_ = f_.derivative(axis);
  // d(g r) = (dg + x_i g / rho) r
  RhoFraction extra{g_.numer.shifted(axis == 0 ? XMono{1, 0} : XMono{0, 1}), g_.rho_power + 1};
  extra.reduce();
  out.g_ = g_.derivative(axis) + extra;
  return out;
}

RadialFunction RadialFunction::conj() const {
  RadialFunction r;
  r.f_ = {f_.numer.conj(), f_.rho_power};
  r.g_ = {g_.numer.conj(), g_.rho_power};
  return r;
}

std::complex<double> RadialFunction::evaluate(double x1, double x2, const ParamValues& v) const {
  const double rho = x1 * x1 + x2 * x2;
  auto eval = [&](const RhoFraction& part) {
    std::complex<double> s = 0.0;
    for (const auto& [m, c] : part.numer.terms())
      s += c.evaluate(v) * std::pow(x1, m.first) * std::pow(x2, m.second);
    return s / std::pow(rho, part.rho_power);
  };
  return eval(f_) + eval(g_) * std::sqrt(rho);
}

}  // namespace kgsymm::opalg
