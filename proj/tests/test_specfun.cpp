#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rverify/errors.hpp"
#include "rverify/quadrature.hpp"
#include "rverify/specfun.hpp"

using namespace rverify;
using sf::cdouble;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZetaHalf = -1.4603545088095868128894991525;

double rel_err(cdouble a, cdouble b) { return std::abs(a - b) / std::abs(b); }

// Complex points with |z| <= 50 at distance >= 0.1 from every integer, so
// that z and 1 - z both stay off the poles.
std::vector<cdouble> gamma_grid() {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::vector<cdouble> out;
  while (out.size() < 200) {
    const cdouble z(u(rng), u(rng) * (out.size() % 3 == 0 ? 0.0 : 1.0));
    if (std::abs(z) > 50.0) continue;
    const double near_int = std::abs(z - std::round(z.real()));
    if (near_int < 0.1) continue;
    out.push_back(z);
  }
  return out;
}

}  // namespace

TEST_CASE("log gamma examples") {
  CHECK(std::real(sf::ln_gamma(5.0)) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
  const cdouble gi = sf::gamma(cdouble(0.0, 1.0));
  CHECK(std::norm(gi) == doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-13));
  CHECK(std::norm(gi) == doctest::Approx(0.2720290550).epsilon(1e-9));
  auto q = quad::integrate_singular([](double x) { return std::exp(-x) / std::sqrt(x); }, 0.0, 1.0,
                                    quad::Tolerance(1e-15, 1e-14)) +
           quad::integrate_semi_infinite([](double x) { return std::exp(-x) / std::sqrt(x); }, 1.0,
                                         quad::Tolerance(1e-15, 1e-14));
  CHECK(std::real(sf::gamma(0.5)) == doctest::Approx(q.real()).epsilon(1e-13));
  CHECK_THROWS_AS(sf::ln_gamma(-2.0), PoleError);
  CHECK_THROWS_AS(sf::ln_gamma(0.0), PoleError);
}

TEST_CASE("gamma recurrence, reflection and conjugate symmetry on 200 random points") {
  for (const cdouble z : gamma_grid()) {
    const cdouble g = sf::gamma(z);
    const cdouble g1 = sf::gamma(z + 1.0);
    CHECK(rel_err(z * g, g1) < 1e-12);
    const cdouble refl = g * sf::gamma(1.0 - z) * sf::sin_pi(z) / kPi;
    CHECK(std::abs(refl - 1.0) < 1e-12);
    const cdouble lc = sf::ln_gamma(std::conj(z));
    const cdouble l = sf::ln_gamma(z);
    CHECK(std::abs(lc - std::conj(l)) <= 1e-13 * std::max(1.0, std::abs(l)));
  }
}

TEST_CASE("reciprocal gamma is entire") {
  CHECK(sf::recip_gamma(0.0) == 0.0);
  CHECK(sf::recip_gamma(-3.0) == 0.0);
  CHECK(sf::recip_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-14));
  CHECK(sf::recip_gamma(-2.5) == doctest::Approx(1.0 / std::tgamma(-2.5)).epsilon(1e-13));
  CHECK(sf::recip_gamma(7.0) == doctest::Approx(1.0 / 720.0).epsilon(1e-14));
}

TEST_CASE("digamma") {
  double h = 0.0;
  constexpr int kN = 1'000'000;
  for (int k = kN; k >= 1; --k) h += 1.0 / k;
  const double gamma_e = h - std::log(double(kN)) - 0.5 / kN + 1.0 / (12.0 * kN * double(kN));
  CHECK(sf::digamma(1.0) == doctest::Approx(-gamma_e).epsilon(1e-12));
  CHECK(sf::digamma(2.0) == doctest::Approx(1.0 - gamma_e).epsilon(1e-12));
  CHECK(sf::digamma(0.5) == doctest::Approx(-gamma_e - 2.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("Bessel J examples") {
  CHECK(sf::bessel_j(0.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sf::bessel_j(0.5, 2.0) == doctest::Approx(std::sqrt(1.0 / kPi) * std::sin(2.0)).epsilon(1e-13));
  // 30-term series summed from the small end with the C library gamma
  double j2 = 0.0;
  for (int k = 29; k >= 0; --k) j2 += (k % 2 ? -1.0 : 1.0) / (std::tgamma(k + 1.0) * std::tgamma(k + 3.0));
  CHECK(sf::bessel_j(2.0, 2.0) == doctest::Approx(j2).epsilon(1e-14));
  CHECK(sf::bessel_j(2.0, 2.0) == doctest::Approx(0.3528340286).epsilon(1e-9));
  CHECK_THROWS_AS(sf::bessel_j(1.0, 13.0), UnsupportedRange);
}

TEST_CASE("Bessel recurrence J_{v-1} + J_{v+1} = (2v/x) J_v") {
  for (double nu = -3.0; nu <= 10.0; nu += 0.37) {
    for (double x = 0.25; x <= 12.0; x += 0.55) {
      const double lhs = sf::bessel_j(nu - 1.0, x) + sf::bessel_j(nu + 1.0, x);
      const double rhs = 2.0 * nu / x * sf::bessel_j(nu, x);
      const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      CHECK(std::abs(lhs - rhs) < 1e-11 * scale);
    }
  }
}

TEST_CASE("dilogarithm") {
  CHECK(sf::li2(0.0) == 0.0);
  double z2 = 0.0, alt = 0.0;
  for (int n = 2'000'000; n >= 1; --n) {
    z2 += 1.0 / (double(n) * n);
    alt += (n % 2 ? -1.0 : 1.0) / (double(n) * n);
  }
  z2 += 1.0 / 2e6;
  CHECK(sf::li2(1.0) == doctest::Approx(z2).epsilon(1e-12));
  CHECK(sf::li2(-1.0) == doctest::Approx(alt).epsilon(1e-12));
  // the reflection used above 1/2 must join the series continuously
  CHECK(sf::li2(0.5) + sf::li2(0.5) ==
        doctest::Approx(kPi * kPi / 6 - std::log(0.5) * std::log(0.5)).epsilon(1e-14));
}

TEST_CASE("complete and incomplete elliptic integrals") {
  CHECK(sf::elliptic_k(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  const double g14 = std::real(sf::gamma(0.25));
  CHECK(sf::elliptic_k(0.5) == doctest::Approx(g14 * g14 / (4.0 * std::sqrt(kPi))).epsilon(1e-14));
  for (double m = 0.0; m <= 0.95 + 1e-12; m += 0.05) {
    auto q = quad::integrate_finite(
        [m](double t) { return 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0, kPi / 2,
        quad::Tolerance(1e-15, 1e-14));
    CHECK(sf::elliptic_k(m) == doctest::Approx(q.real()).epsilon(1e-11));
  }
  CHECK(sf::elliptic_f(0.7, 0.0) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(sf::elliptic_f(kPi / 2, 0.8) == doctest::Approx(sf::elliptic_k(0.8)).epsilon(1e-13));

  // one descending Landen step: k1 = (1-k')/(1+k'), tan(phi1 - phi) = k' tan phi,
  // F(phi | k) = (1 + k1)/2 F(phi1 | k1)
  const double m = 0.3, phi = 1.0;
  const double kp = std::sqrt(1.0 - m);
  const double k1 = (1.0 - kp) / (1.0 + kp);
  const double phi1 = phi + std::atan(kp * std::tan(phi));
  CHECK(sf::elliptic_f(phi, m) == doctest::Approx(0.5 * (1.0 + k1) * sf::elliptic_f(phi1, k1 * k1)).epsilon(1e-13));
}

TEST_CASE("zeta and xi") {
  CHECK(std::real(sf::zeta(2.0)) == doctest::Approx(kPi * kPi / 6).epsilon(1e-13));
  CHECK(std::real(sf::zeta(4.0)) == doctest::Approx(std::pow(kPi, 4) / 90).epsilon(1e-13));
  CHECK(std::real(sf::zeta(0.0)) == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(std::real(sf::zeta(0.5)) == doctest::Approx(kZetaHalf).epsilon(1e-12));
  CHECK_THROWS_AS(sf::zeta(1.0), PoleError);

  const cdouble x3 = sf::xi_big(3.0);
  CHECK(std::abs(x3 - sf::xi_big(-3.0)) < 1e-13 * std::abs(x3));
  const double xi_half = -0.125 * std::pow(kPi, -0.25) * std::real(sf::gamma(0.25)) * kZetaHalf;
  CHECK(std::real(sf::xi_big(0.0)) == doctest::Approx(xi_half).epsilon(1e-12));
  CHECK(std::real(sf::xi_big(0.0)) == doctest::Approx(0.4971207782).epsilon(1e-9));
  CHECK(std::abs(std::imag(sf::xi_big(5.0))) < 1e-13);
  CHECK(std::real(sf::xi(0.0)) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::real(sf::xi(1.0)) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("xi functional equation on 100 random points of the strip") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> re(-1.0, 2.0);
  std::uniform_real_distribution<double> im(-40.0, 40.0);
  for (int i = 0; i < 100; ++i) {
    const cdouble s(re(rng), im(rng));
    CHECK(rel_err(sf::xi(s), sf::xi(1.0 - s)) < 1e-10);
  }
}

TEST_CASE("Pochhammer") {
  CHECK(sf::pochhammer(3.7, 0) == 1.0);
  CHECK(sf::pochhammer(1.0, 6) == 720.0);
  CHECK(sf::pochhammer(0.5, 3) == doctest::Approx(15.0 / 8.0).epsilon(1e-15));
}
