#include "rverify/outcome.hpp"

#include <algorithm>
#include <cmath>

namespace rverify {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkipped:
      return "skipped";
    case Status::kExperimental:
      return "experimental";
  }
  return "unknown";
}

CheckOutcome compare(const Sides& sides, quad::Tolerance tol) {
  CheckOutcome out;
  out.lhs = sides.lhs;
  out.rhs = sides.rhs;
  out.lhs_imag = sides.lhs_imag;
  out.rhs_imag = sides.rhs_imag;
  out.abs_residual = std::hypot(sides.lhs - sides.rhs, sides.lhs_imag - sides.rhs_imag);
  const double mag = std::max(std::hypot(sides.lhs, sides.lhs_imag),
                              std::hypot(sides.rhs, sides.rhs_imag));
  out.rel_residual = mag > 0.0 ? out.abs_residual / mag : 0.0;
  // NaN residuals fail: the comparison below is false for them.
  out.status = out.abs_residual <= tol.bound(mag) ? Status::kPass : Status::kFail;
  return out;
}

}  // namespace rverify
