#include "kgsymm/opalg/text.hpp"

#include <sstream>
#include <vector>

#include "kgsymm/error.hpp"

namespace kgsymm::opalg {

namespace {

std::string radial_text(const TermView& t) {
  std::string s;
  auto factor = [&](const char* sym, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += sym;
    if (e != 1) s += "^" + std::to_string(e);
  };
  factor("x1", t.x1);
  factor("x2", t.x2);
  factor("r", t.r);
  return s.empty() ? "1" : s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

RadialFunction parse_radial(std::string_view s, Coeff c) {
  int e[3] = {0, 0, 0};
  s = trim(s);
  if (s != "1") {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto end = s.find('*', pos);
      const std::string_view f = s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      const auto caret = f.find('^');
      const std::string_view sym = f.substr(0, caret);
      const int power = caret == std::string_view::npos ? 1 : std::stoi(std::string(f.substr(caret + 1)));
      if (sym == "x1")
        e[0] += power;
      else if (sym == "x2")
        e[1] += power;
      else if (sym == "r")
        e[2] += power;
      else
        throw DomainError("bad radial factor: " + std::string(f));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
  }
  if (e[0] < 0 || e[1] < 0) throw DomainError("negative x exponent in radial part");
  return RadialFunction::monomial(std::move(c), e[0], e[1], e[2]);
}

}  // namespace

std::string to_text(const OperatorExpr& x) {
  const auto terms = x.terms();
  if (terms.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& t : terms)
    os << t.coeff.to_string() << " | " << radial_text(t) << " | " << t.p1 << ' ' << t.p2 << '\n';
  return os.str();
}

OperatorExpr parse_operator(std::string_view text) {
  OperatorExpr out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line == "0") continue;
    const auto bar1 = line.find(" | ");
    const auto bar2 = line.find(" | ", bar1 == std::string_view::npos ? 0 : bar1 + 3);
    if (bar1 == std::string_view::npos || bar2 == std::string_view::npos)
      throw DomainError("malformed operator line: " + std::string(line));
    const Coeff c = Coeff::parse(line.substr(0, bar1));
    RadialFunction h = parse_radial(line.substr(bar1 + 3, bar2 - bar1 - 3), c);
    std::istringstream ps{std::string(line.substr(bar2 + 3))};
    int a = -1;
    int b = -1;
    if (!(ps >> a >> b) || a < 0 || b < 0) throw DomainError("bad momentum exponents: " + std::string(line));
    out += OperatorExpr::radial(std::move(h), {a, b});
  }
  return out;
}

}  // namespace kgsymm::opalg
