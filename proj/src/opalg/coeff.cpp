#include "kgsymm/opalg/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgsymm/error.hpp"

namespace kgsymm::opalg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

mpq_class parse_rational(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw DomainError("empty rational literal");
  if (s.front() == '+') s.remove_prefix(1);
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0) throw DomainError("bad rational literal: " + std::string(s));
  q.canonicalize();
  return q;
}

// Splits on " + " outside brackets and parentheses.
std::vector<std::string_view> split_sum(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth == 0 && s.compare(i, 3, " + ") == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

// ---------------------------------------------------------------- GaussRational

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw DomainError("division by zero Gaussian rational");
  const mpq_class n2 = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= n2;
  im_ /= n2;
  return *this;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im = im_.get_str() + "*i";
  if (sgn(re_) == 0) return im;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im;
}

GaussRational GaussRational::parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.substr(text.size() - 2) == "*i") {
    std::string_view body = text.substr(0, text.size() - 2);
    const auto split = body.find_last_of("+-");
    if (split != std::string_view::npos && split > 0 && body[split - 1] != '/')
      return {parse_rational(body.substr(0, split)), parse_rational(body.substr(split))};
    return {0, parse_rational(body)};
  }
  return {parse_rational(text)};
}

// ---------------------------------------------------------------- params

std::string_view param_symbol(Param p) {
  switch (p) {
    case Param::MassEff: return "mt";
    case Param::Coupling: return "k";
    case Param::OmegaEff: return "wt";
    case Param::Curvature: return "lam";
  }
  return "?";
}

double ParamValues::operator[](Param p) const {
  switch (p) {
    case Param::MassEff: return m_eff;
    case Param::Coupling: return coupling;
    case Param::OmegaEff: return omega_eff;
    case Param::Curvature: return curvature;
  }
  return 0.0;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(GaussRational c) {
  if (!c.is_zero()) terms_.emplace_back(Exponents{}, std::move(c));
}

LaurentPoly LaurentPoly::monomial(GaussRational c, Exponents e) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
  return p;
}

void LaurentPoly::add_term(const Exponents& e, const GaussRational& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& key) { return t.first < key; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, Term{e, c});
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
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
      GaussRational c = std::move(a->second);
      c += b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.scaled(b.terms_[0].second, b.terms_[0].first);
  if (a.is_monomial()) return b.scaled(a.terms_[0].second, a.terms_[0].first);
  std::vector<LaurentPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kParamCount; ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
      prods.emplace_back(e, ca * cb);
    }
  std::stable_sort(prods.begin(), prods.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  LaurentPoly out;
  for (auto& t : prods) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
  return out;
}

LaurentPoly LaurentPoly::scaled(const GaussRational& c, const Exponents& e) const {
  LaurentPoly out;
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [te, tc] : terms_) {
    Exponents ne;
    for (int i = 0; i < kParamCount; ++i) ne[i] = static_cast<std::int16_t>(te[i] + e[i]);
    out.terms_.emplace_back(ne, tc * c);
  }
  return out;
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = c.conj();
  return r;
}

std::complex<double> LaurentPoly::evaluate(const ParamValues& v) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double w = 1.0;
    for (int i = 0; i < kParamCount; ++i)
      if (e[i] != 0) w *= std::pow(v[static_cast<Param>(i)], e[i]);
    sum += c.to_complex() * w;
  }
  return sum;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly{};
  // Shift both to ordinary polynomials; lex division then terminates and
  // leaves a zero remainder exactly when d divides the numerator.
  auto min_exponents = [](const LaurentPoly& p) {
    Exponents lo = p.terms_.front().first;
    for (const auto& [e, c] : p.terms_)
      for (int i = 0; i < kParamCount; ++i) lo[i] = std::min(lo[i], e[i]);
    for (auto& v : lo) v = static_cast<std::int16_t>(-v);
    return lo;
  };
  const Exponents sn = min_exponents(*this);
  const Exponents sd = min_exponents(d);
  LaurentPoly rem = scaled(1, sn);
  const LaurentPoly den = d.scaled(1, sd);
  const auto& [lead_e, lead_c] = den.terms_.back();
  LaurentPoly q;
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.terms_.back();
    Exponents e;
    for (int i = 0; i < kParamCount; ++i) {
      e[i] = static_cast<std::int16_t>(re[i] - lead_e[i]);
      if (e[i] < 0) return std::nullopt;
    }
    const GaussRational c = rc / lead_c;
    q.add_term(e, c);
    rem -= den.scaled(c, e);
  }
  Exponents back;
  for (int i = 0; i < kParamCount; ++i) back[i] = static_cast<std::int16_t>(sd[i] - sn[i]);
  return q.scaled(1, back);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "[0]";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '[' << c.to_string() << ']';
    for (int i = 0; i < kParamCount; ++i)
      if (e[i] != 0) os << '*' << param_symbol(static_cast<Param>(i)) << '^' << e[i];
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly out;
  for (std::string_view term : split_sum(trim(text))) {
    term = trim(term);
    if (term.empty() || term.front() != '[') throw DomainError("bad polynomial term: " + std::string(term));
    const auto close = term.find(']');
    if (close == std::string_view::npos) throw DomainError("unterminated coefficient: " + std::string(term));
    const GaussRational c = GaussRational::parse(term.substr(1, close - 1));
    Exponents e{};
    std::string_view rest = term.substr(close + 1);
    while (!rest.empty()) {
      if (rest.front() != '*') throw DomainError("bad monomial: " + std::string(term));
      rest.remove_prefix(1);
      const auto end = rest.find('*');
      std::string_view factor = rest.substr(0, end);
      rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
      const auto caret = factor.find('^');
      const std::string_view sym = factor.substr(0, caret);
      const int power = caret == std::string_view::npos ? 1 : std::stoi(std::string(factor.substr(caret + 1)));
      bool found = false;
      for (int i = 0; i < kParamCount; ++i)
        if (param_symbol(static_cast<Param>(i)) == sym) {
          e[i] = static_cast<std::int16_t>(e[i] + power);
          found = true;
        }
      if (!found) throw DomainError("unknown parameter symbol: " + std::string(sym));
    }
    out.add_term(e, c);
  }
  return out;
}

// ---------------------------------------------------------------- Coeff

Coeff::Coeff(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  normalize();
}

Coeff Coeff::param(Param p, int power) {
  Exponents e{};
  e[static_cast<int>(p)] = static_cast<std::int16_t>(power);
  return LaurentPoly::monomial(1, e);
}

void Coeff::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(GaussRational(1));
    return;
  }
  if (den_.is_monomial()) {
    const auto& [e, c] = den_.terms()[0];
    Exponents neg;
    for (int i = 0; i < kParamCount; ++i) neg[i] = static_cast<std::int16_t>(-e[i]);
    num_ = num_.scaled(GaussRational(1) / c, neg);
    den_ = LaurentPoly(GaussRational(1));
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly(GaussRational(1));
  }
}

bool Coeff::is_one() const { return num_ == den_; }

Coeff& Coeff::operator+=(const Coeff& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  if (o.is_zero()) throw DomainError("division by zero coefficient");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Coeff Coeff::conj() const { return Coeff(num_.conj(), den_.conj()); }

std::complex<double> Coeff::evaluate(const ParamValues& v) const {
  return num_.evaluate(v) / den_.evaluate(v);
}

std::string Coeff::to_string() const {
  if (den_ == LaurentPoly(GaussRational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Coeff Coeff::parse(std::string_view text) {
  text = trim(text);
  const auto split = text.find(")/(");
  if (!text.empty() && text.front() == '(' && split != std::string_view::npos && text.back() == ')') {
    return Coeff(LaurentPoly::parse(text.substr(1, split - 1)),
                 LaurentPoly::parse(text.substr(split + 3, text.size() - split - 4)));
  }
  return Coeff(LaurentPoly::parse(text));
}

}  // namespace kgsymm::opalg
