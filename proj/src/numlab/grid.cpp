#include "kgsymm/numlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kgsymm/error.hpp"

namespace kgsymm::numlab {

using opalg::Formula;
using opalg::OperatorExpr;
using opalg::ParamValues;
using opalg::PMono;

namespace {

int half_width(int derivative, int order) { return (derivative + 1) / 2 + order / 2 - 1; }

double ipow(double x, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

// d^k/dx^k along one axis (axis 0 strides by n, axis 1 by 1), zero outside.
Field differentiate(const Field& f, const Grid2D& g, int axis, int k) {
  if (k == 0) return f;
  const std::vector<double> w = central_weights(k, g.order);
  const int hw = static_cast<int>(w.size()) / 2;
  const double scale = 1.0 / ipow(g.h, k);
  Field out(f.size());
  const int n = g.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (int s = -hw; s <= hw; ++s) {
        const int ii = axis == 0 ? i + s : i;
        const int jj = axis == 0 ? j : j + s;
        if (ii < 0 || ii >= n || jj < 0 || jj >= n) continue;
        acc += w[s + hw] * f[g.index(ii, jj)];
      }
      out[g.index(i, j)] = acc * scale;
    }
  return out;
}

void check_boundary(const Field& f, const Grid2D& g, int band) {
  double total = 0.0, edge = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const double a = std::norm(f[g.index(i, j)]);
      total += a;
      if (i < band || j < band || i >= g.n - band || j >= g.n - band) edge += a;
    }
  if (total > 0.0 && std::sqrt(edge / total) > 1e-10)
    throw DomainError("field carries " + std::to_string(std::sqrt(edge / total)) +
                      " of its norm at the grid boundary; enlarge the grid");
}

}  // namespace

Grid2D Grid2D::around(double cx, double cy, double h, int n, int order) {
  if (!(h > 0.0) || n < 3 || order < 2 || order % 2 != 0) throw DomainError("invalid grid parameters");
  return {cx + h / 3.0, cy + h / 7.0, h, n, order};
}

std::vector<double> central_weights(int derivative, int order) {
  const int w = half_width(derivative, order);
  const int np = 2 * w + 1;
  std::vector<double> x(np);
  for (int i = 0; i < np; ++i) x[i] = i - w;
  const int m = derivative;
  std::vector<std::vector<double>> c(np, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0, c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < np; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> out(np);
  for (int i = 0; i < np; ++i) out[i] = c[i][m];
  return out;
}

Field sample_packet(const Packet& p, const Grid2D& g) {
  Field f(g.size());
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const double dx = g.x(i) - p.cx, dy = g.y(j) - p.cy;
      const double amp = std::exp(-(dx * dx + dy * dy) / (4.0 * p.sigma * p.sigma));
      f[g.index(i, j)] = amp * std::polar(1.0, p.kx * g.x(i) + p.ky * g.y(j));
    }
  return f;
}

Grid2D grid_for(const Packet& p, double h, int order, double extent) {
  const int n = static_cast<int>(std::ceil(2.0 * extent * p.sigma / h)) + 1;
  return Grid2D::around(p.cx, p.cy, h, n, order);
}

double norm(const Field& f, const Grid2D& g) {
  double s = 0.0;
  for (const cplx& v : f) s += std::norm(v);
  return std::sqrt(s) * g.h;
}

Field apply_on_grid(const OperatorExpr& op, const Field& field, const Grid2D& g, const ParamValues& params) {
  if (field.size() != g.size()) throw DomainError("field does not match the grid");

  struct Mono {
    cplx c;
    int a, b, s;
  };
  std::map<PMono, std::vector<Mono>> groups;
  int band = 1;
  for (const auto& t : op.terms()) {
    groups[{t.p1, t.p2}].push_back({t.coeff.evaluate(params), t.x1, t.x2, t.r});
    band = std::max({band, half_width(t.p1, g.order), half_width(t.p2, g.order)});
  }
  Field out(g.size(), 0.0);
  if (groups.empty()) return out;
  check_boundary(field, g, band);

  for (const auto& [key, monos] : groups) {
    const auto [a, b] = key;
    Field d = differentiate(differentiate(field, g, 1, b), g, 0, a);
    // p^(a+b) = (-i)^(a+b) d^(a+b)
    cplx phase = 1.0;
    for (int k = 0; k < a + b; ++k) phase *= cplx(0.0, -1.0);
    for (int i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      for (int j = 0; j < g.n; ++j) {
        const double y = g.y(j);
        const double r = std::hypot(x, y);
        cplx mult = 0.0;
        for (const Mono& m : monos) mult += m.c * ipow(x, m.a) * ipow(y, m.b) * std::pow(r, m.s);
        out[g.index(i, j)] += phase * mult * d[g.index(i, j)];
      }
    }
  }
  return out;
}

Field apply_formula(const Formula& f, const Field& field, const Grid2D& g, const ParamValues& params) {
  Field out(g.size(), 0.0);
  for (const auto& chain : f.chains()) {
    Field v = field;
    for (auto it = chain.factors.rbegin(); it != chain.factors.rend(); ++it) v = apply_on_grid(*it, v, g, params);
    const cplx w = chain.weight.evaluate(params);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += w * v[k];
  }
  return out;
}

double formula_residual_numeric(const Formula& lhs, const Formula& rhs, const std::vector<Packet>& packets,
                                const ParamValues& params, const NumericOptions& opt) {
  double worst = 0.0;
  for (const Packet& p : packets) {
    const Grid2D g = grid_for(p, opt.h, opt.order);
    const Field psi = sample_packet(p, g);
    const Field a = apply_formula(lhs, psi, g, params);
    const Field b = apply_formula(rhs, psi, g, params);
    Field diff(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
    worst = std::max(worst, norm(diff, g) / norm(psi, g));
  }
  return worst;
}

double bracket_residual_numeric(const Formula& a, const Formula& b, const Formula& rhs, opalg::BracketKind kind,
                                const std::vector<Packet>& packets, const ParamValues& params,
                                const NumericOptions& opt) {
  const Formula lhs = kind == opalg::BracketKind::Commutator ? opalg::commutator(a, b) : opalg::anticommutator(a, b);
  return formula_residual_numeric(lhs, rhs, packets, params, opt);
}

std::vector<Packet> default_packets() {
  return {{3.2, 2.4, 0.35, 0.4, -0.4}, {-2.4, 3.2, 0.35, -0.2, 0.0}};
}

}  // namespace kgsymm::numlab
