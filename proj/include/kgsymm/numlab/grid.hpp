#pragma once

// Finite-difference realization of canonical operators on a square lattice.

#include <complex>
#include <vector>

#include "kgsymm/opalg/coeff.hpp"
#include "kgsymm/opalg/formula.hpp"
#include "kgsymm/opalg/operator_expr.hpp"

namespace kgsymm::numlab {

using cplx = std::complex<double>;

/// N x N lattice with spacing h. Point (i, j) sits at
///   x1 = x0 + (i - (N-1)/2) h,   x2 = y0 + (j - (N-1)/2) h.
struct Grid2D {
  double x0 = 0.0;
  double y0 = 0.0;
  double h = 0.05;
  int n = 200;
  int order = 8;

  /// Lattice centred at (cx, cy), nudged by (h/3, h/7) so that no point can
  /// land on the coordinate origin.
  static Grid2D around(double cx, double cy, double h, int n, int order = 8);

  double x(int i) const { return x0 + (i - 0.5 * (n - 1)) * h; }
  double y(int j) const { return y0 + (j - 0.5 * (n - 1)) * h; }
  std::size_t size() const { return static_cast<std::size_t>(n) * n; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n + j; }
};

/// Samples of a complex field, row-major in (i, j).
using Field = std::vector<cplx>;

/// Central-difference weights for the d-th derivative with the given even
/// order of accuracy, on offsets -w..w (Fornberg's recursion).
std::vector<double> central_weights(int derivative, int order);

struct Packet {
  double cx;
  double cy;
  double sigma;
  double kx = 0.0;
  double ky = 0.0;
};

/// exp(-|x-c|^2 / (4 sigma^2) + i k.x) sampled on the grid; sigma is the
/// position spread of |psi|^2.
Field sample_packet(const Packet& p, const Grid2D& g);

/// Lattice covering the packet out to `extent` widths on each side.
Grid2D grid_for(const Packet& p, double h, int order = 8, double extent = 15.5);

double norm(const Field& f, const Grid2D& g);

/// op applied pointwise: radial parts multiply, p_i = -i d/dx_i by central
/// differences. Throws DomainError when the input field carries more than
/// 1e-10 of its norm within a stencil width of the boundary.
Field apply_on_grid(const opalg::OperatorExpr& op, const Field& field, const Grid2D& g,
                    const opalg::ParamValues& params);

/// Sum of chains, each applied factor by factor (rightmost first).
Field apply_formula(const opalg::Formula& f, const Field& field, const Grid2D& g, const opalg::ParamValues& params);

/// Arbitration defaults: fourth-order operator chains lose about 1/h^4 of
/// precision to rounding, so a coarse lattice with a wide stencil wins.
struct NumericOptions {
  double h = 0.06;
  int order = 16;
};

/// max over packets of ||(lhs - rhs) psi|| / ||psi||.
double formula_residual_numeric(const opalg::Formula& lhs, const opalg::Formula& rhs,
                                const std::vector<Packet>& packets, const opalg::ParamValues& params,
                                const NumericOptions& opt = {});

/// Residual of bracket(A, B) = rhs with the bracket expanded as A(B psi) -+ B(A psi).
double bracket_residual_numeric(const opalg::Formula& a, const opalg::Formula& b, const opalg::Formula& rhs,
                                opalg::BracketKind kind, const std::vector<Packet>& packets,
                                const opalg::ParamValues& params, const NumericOptions& opt = {});

/// Two packets of spread 0.35 centred 4 away from the origin, so that
/// |psi(0)| ~ 1e-14 and the r^-3 terms stay harmless.
std::vector<Packet> default_packets();

}  // namespace kgsymm::numlab
