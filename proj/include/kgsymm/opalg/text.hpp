#pragma once

// Line-oriented serialization of canonical operators:
//
//   coeff | radial | p1-exponent p2-exponent
//
// e.g. "[-1/2]*mt^-1 | x1*r^-1 | 0 1". Terms appear in the canonical
// order of OperatorExpr::terms(); the zero operator serializes to "0".

#include <string>
#include <string_view>

#include "kgsymm/opalg/operator_expr.hpp"

namespace kgsymm::opalg {

std::string to_text(const OperatorExpr& x);
OperatorExpr parse_operator(std::string_view text);

}  // namespace kgsymm::opalg
