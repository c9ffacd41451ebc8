#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rverify/errors.hpp"
#include "rverify/mellin.hpp"
#include "rverify/specfun.hpp"

using namespace rverify;

namespace {

constexpr double kPi = std::numbers::pi;
const mellin::RealFn kExpNeg = [](double x) { return std::exp(-x); };
const mellin::RealFn kRecip = [](double x) { return 1.0 / (1.0 + x); };
const mellin::CoefficientFn kOne = [](double) { return 1.0; };
const mellin::CoefficientFn kFactorial = [](double k) { return std::real(sf::gamma(k + 1.0)); };

double raw_poch(double a, double q) {
  double out = 1.0, p = a;
  for (int k = 0; k < 400; ++k, p *= q) out *= 1.0 - p;
  return out;
}

}  // namespace

TEST_CASE("master value examples") {
  CHECK(mellin::master_value(kOne, 0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(mellin::master_value(kFactorial, 0.25) == doctest::Approx(kPi * std::numbers::sqrt2).epsilon(1e-13));
  const double m = 1.0 / 3.0, np = 2.0 / 3.0;
  auto phi = [=](double k) { return std::real(sf::gamma(k + m + np)) / std::real(sf::gamma(m + np)); };
  CHECK(mellin::master_value(phi, m) == doctest::Approx(2.0 * kPi / std::numbers::sqrt3).epsilon(1e-13));
  CHECK_THROWS_AS(mellin::master_value(kOne, 0.0), PoleError);
}

TEST_CASE("master theorem by quadrature") {
  for (double n : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const CheckOutcome o = mellin::master_check(kExpNeg, kOne, n, quad::Tolerance(1e-12, 1e-8));
    CHECK(o.message.empty());
    CHECK(o.abs_residual < 1e-9);
  }
  const CheckOutcome r = mellin::master_check(kRecip, kFactorial, 0.25, quad::Tolerance(1e-12, 1e-8));
  CHECK(r.status == Status::kPass);
  CHECK(r.lhs == doctest::Approx(kPi * std::numbers::sqrt2).epsilon(1e-9));

  const double m = 1.0 / 3.0, np = 2.0 / 3.0;
  auto F = [=](double x) { return std::pow(1.0 + x, -(m + np)); };
  auto phi = [=](double k) { return std::real(sf::gamma(k + m + np)) / std::real(sf::gamma(m + np)); };
  const CheckOutcome b = mellin::master_check(F, phi, m, quad::Tolerance(1e-10, 0.0));
  CHECK(std::abs(b.lhs - 2.0 * kPi / std::numbers::sqrt3) < 1e-10);
}

TEST_CASE("Frullani closed form and quadrature") {
  CHECK(mellin::frullani(1.0, 0.0, 1.0, 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(mellin::frullani(1.0, 0.0, 1.7, 1.7) == 0.0);
  CHECK(mellin::frullani(1.0, 0.0, 2.0, 1.0) == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  CHECK(std::abs(mellin::frullani_integral(kExpNeg, 1.0, 2.0).real() - std::log(2.0)) < 1e-12);
  CHECK(std::abs(mellin::frullani_integral(kRecip, 2.0, 1.0).real() + std::log(2.0)) < 1e-12);
  CHECK(std::abs(mellin::frullani_integral(kExpNeg, 1.5, 1.5).real()) < 1e-15);
}

TEST_CASE("Frullani is antisymmetric in a and b") {
  for (auto [a, b] : {std::pair{1.0, 2.0}, {0.3, 5.0}, {7.0, 0.1}}) {
    CHECK(mellin::frullani(1.0, 0.2, a, b) == doctest::Approx(-mellin::frullani(1.0, 0.2, b, a)).epsilon(1e-15));
    const double fwd = mellin::frullani_integral(kExpNeg, a, b).real();
    const double rev = mellin::frullani_integral(kExpNeg, b, a).real();
    CHECK(std::abs(fwd + rev) < 1e-11);
  }
}

TEST_CASE("generalized Frullani limit") {
  const double gamma_e = -sf::digamma(1.0);
  auto same = mellin::generalized_frullani_limit(kExpNeg, kExpNeg, 1.0, 3.0);
  CHECK(std::abs(same.real() - std::log(3.0)) < 1e-6);
  auto mixed = mellin::generalized_frullani_limit(kExpNeg, kRecip, 1.0, 1.0);
  CHECK(std::abs(mixed.real() + gamma_e) < 1e-6);
  auto shifted = mellin::generalized_frullani_limit(kExpNeg, kRecip, 1.0, 2.0);
  CHECK(std::abs(shifted.real() - (std::log(2.0) - gamma_e)) < 1e-6);

  CHECK(mellin::generalized_frullani_rhs(1.0, 0.0, 1.0, 2.0, -gamma_e) ==
        doctest::Approx(std::log(2.0) - gamma_e).epsilon(1e-15));
  const CheckOutcome o =
      mellin::generalized_frullani_check(kExpNeg, kRecip, 1.0, 0.0, 1.0, 2.0, -gamma_e, quad::Tolerance(1e-5, 0.0));
  CHECK(o.status == Status::kPass);
}

TEST_CASE("both correction-term routes agree") {
  const double numeric = mellin::dlog_ratio_at_0([](double s) { return std::real(sf::ln_gamma(1.0 + s)); });
  CHECK(std::abs(numeric - sf::digamma(1.0)) < 1e-8);
}

TEST_CASE("extrapolated limit does not depend on the ladder") {
  for (auto [g, b] : {std::pair{kExpNeg, 3.0}, {kRecip, 1.0}, {kRecip, 2.0}}) {
    const double v1 = mellin::generalized_frullani_limit(kExpNeg, g, 1.0, b, mellin::kFrullaniLadder).real();
    const double v2 = mellin::generalized_frullani_limit(kExpNeg, g, 1.0, b, mellin::kFrullaniLadderAlt).real();
    CHECK(std::abs(v1 - v2) < 1e-6);
  }
}

TEST_CASE("mismatched boundary values are rejected") {
  CHECK_THROWS_AS(mellin::generalized_frullani_check(kExpNeg, [](double x) { return 2.0 / (1.0 + x); }, 1.0,
                                                     0.0, 1.0, 1.0, 0.0, quad::Tolerance(1e-5, 0.0)),
                  DomainError);
}

TEST_CASE("q-beta integral") {
  const double q = 0.2;
  const Sides s = mellin::q_beta_sides(0.5, 0.0, q);
  const double closed = kPi * raw_poch(std::sqrt(q), q) / raw_poch(q, q);
  CHECK(s.rhs == doctest::Approx(closed).epsilon(1e-13));
  CHECK(std::abs(s.residual()) < 1e-8);
  CHECK(std::abs(mellin::q_beta_sides(1.0 / 3.0, 0.3, 0.1).residual()) < 1e-8);
  CHECK(std::abs(mellin::q_beta_sides(0.5, 0.2, 0.2).residual()) < 1e-8);
  CHECK_THROWS_AS(mellin::q_beta_sides(1.5, 0.0, 0.2), DomainError);
  CHECK_THROWS_AS(mellin::q_beta_sides(0.5, 0.0, 0.7), DomainError);
}
