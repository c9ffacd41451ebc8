#pragma once

// Integrals with known values across every rule, for the error-honesty
// property: the true error should sit within 10x the reported estimate.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "rverify/quadrature.hpp"

namespace oracle {

struct Case {
  const char* name;
  std::function<rverify::quad::QuadResult(rverify::quad::Tolerance)> run;
  double exact;
};

inline std::vector<Case> honesty_cases() {
  using namespace rverify::quad;
  constexpr double kPi = std::numbers::pi;
  const double e = std::numbers::e;
  return {
      {"x^2", [](Tolerance t) { return integrate_finite([](double x) { return x * x; }, 0, 1, t); }, 1.0 / 3},
      {"sin", [](Tolerance t) { return integrate_finite([](double x) { return std::sin(x); }, 0, kPi, t); }, 2.0},
      {"exp", [](Tolerance t) { return integrate_finite([](double x) { return std::exp(x); }, 0, 1, t); }, e - 1},
      {"atan'", [](Tolerance t) { return integrate_finite([](double x) { return 1 / (1 + x * x); }, 0, 1, t); },
       kPi / 4},
      {"cos10", [](Tolerance t) { return integrate_finite([](double x) { return std::cos(10 * x); }, 0, 1, t); },
       std::sin(10.0) / 10},
      {"log1p", [](Tolerance t) { return integrate_finite([](double x) { return std::log1p(x); }, 0, 1, t); },
       2 * std::log(2.0) - 1},
      {"sqrt", [](Tolerance t) { return integrate_finite([](double x) { return std::sqrt(x); }, 0, 1, t); },
       2.0 / 3},
      {"runge",
       [](Tolerance t) { return integrate_finite([](double x) { return 1 / (1 + 25 * x * x); }, -1, 1, t); },
       2 * std::atan(5.0) / 5},
      {"gauss2", [](Tolerance t) { return integrate_finite([](double x) { return std::exp(-x * x); }, 0, 2, t); },
       std::sqrt(kPi) / 2 * std::erf(2.0)},
      {"x^-1/2", [](Tolerance t) { return integrate_singular([](double x) { return 1 / std::sqrt(x); }, 0, 1, t); },
       2.0},
      {"log", [](Tolerance t) { return integrate_singular([](double x) { return std::log(x); }, 0, 1, t); }, -1.0},
      {"log/sqrt",
       [](Tolerance t) {
         return integrate_singular([](double x) { return std::log(x) / std::sqrt(x); }, 0, 1, t);
       },
       -4.0},
      {"arcsine",
       [](Tolerance t) {
         return integrate_singular(
             [](double x, double off) {
               const double right = off < 0 ? -off : 1 - x;
               return 1 / std::sqrt(x * right);
             },
             0, 1, t);
       },
       kPi},
      {"x^-0.75",
       [](Tolerance t) { return integrate_singular([](double x) { return std::pow(x, -0.75); }, 0, 1, t); }, 4.0},
      {"exp(-x)",
       [](Tolerance t) { return integrate_semi_infinite([](double x) { return std::exp(-x); }, 0, t); }, 1.0},
      {"cauchy",
       [](Tolerance t) { return integrate_semi_infinite([](double x) { return 1 / (1 + x * x); }, 0, t); },
       kPi / 2},
      {"bose",
       [](Tolerance t) {
         return integrate_semi_infinite([](double x) { return x == 0 ? 0.0 : x * x * x / std::expm1(x); }, 0, t);
       },
       std::pow(kPi, 4) / 15},
      {"ram0",
       [](Tolerance t) {
         return integrate_semi_infinite([](double x) { return 1 / std::expm1(2 * kPi * std::sqrt(x)); }, 0, t);
       },
       1.0 / 12},
      {"(1+x)^-2",
       [](Tolerance t) { return integrate_semi_infinite([](double x) { return 1 / ((1 + x) * (1 + x)); }, 0, t); },
       1.0},
      {"sech", [](Tolerance t) { return integrate_line([](double x) { return 1 / std::cosh(x); }, t); }, kPi},
      {"sinc",
       [](Tolerance t) {
         return integrate_oscillatory([](double x) { return x == 0 ? 1.0 : std::sin(x) / x; },
                                      [](std::size_t k) { return kPi * double(k); }, t);
       },
       kPi / 2},
  };
}

}  // namespace oracle
