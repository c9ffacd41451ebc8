#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rverify/quadrature.hpp"

namespace rverify {

// Left and right side of one identity at one parameter point. The imaginary
// parts are zero except for identities whose sides are genuinely complex.
struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_imag = 0.0;
  double rhs_imag = 0.0;
  [[nodiscard]] double residual() const { return lhs - rhs; }
};

enum class Status { kPass, kFail, kSkipped, kExperimental };

const char* to_string(Status s);

using ParamValue = std::variant<double, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct CheckOutcome {
  std::string check_id;
  Params params;
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_imag = 0.0;
  double rhs_imag = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  Status status = Status::kSkipped;
  double wall_time_ms = 0.0;
  std::string message;  // exception text or diagnostic note; empty otherwise
};

// abs_residual = |lhs - rhs| (complex modulus), rel_residual = abs / max(|lhs|, |rhs|) (0 when
// both vanish); pass iff abs_residual <= tol.bound(max(|lhs|, |rhs|)).
CheckOutcome compare(const Sides& sides, quad::Tolerance tol);

}  // namespace rverify
