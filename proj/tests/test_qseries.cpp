#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rverify/contfrac.hpp"
#include "rverify/qseries.hpp"

using namespace rverify;

namespace {

// Raw products with a fixed 200-factor count, accumulated from the small
// factors upward so that the rounding order differs from the library.
double raw_poch(double a, double q) {
  std::vector<double> f;
  double p = a;
  for (int k = 0; k < 200; ++k, p *= q) f.push_back(1.0 - p);
  double out = 1.0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) out *= *it;
  return out;
}
double raw_f(double q) { return raw_poch(q, q); }

}  // namespace

TEST_CASE("q-Pochhammer examples") {
  CHECK(qs::qpochhammer_inf(0.0, 0.3) == 1.0);
  CHECK(qs::qpochhammer_inf(0.1, 0.1) == doctest::Approx(raw_poch(0.1, 0.1)).epsilon(1e-14));
  CHECK(qs::qpochhammer_inf(0.1, 0.1) == doctest::Approx(0.8900100999).epsilon(1e-9));
  const double a = 0.3, q = 0.2;
  CHECK(std::abs(qs::qpochhammer_inf(a, q) - (1.0 - a) * qs::qpochhammer_inf(a * q, q)) < 1e-15);
  CHECK(qs::qpochhammer(a, q, 0) == 1.0);
  CHECK(qs::qpochhammer(a, q, 3) == doctest::Approx((1 - a) * (1 - a * q) * (1 - a * q * q)).epsilon(1e-15));
}

TEST_CASE("q-Pochhammer recurrence on random arguments") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ua(-1.0, 1.0);
  std::uniform_real_distribution<double> uq(0.0, 0.5);
  for (int i = 0; i < 200; ++i) {
    const double a = ua(rng), q = uq(rng);
    const double lhs = qs::qpochhammer_inf(a, q);
    const double rhs = (1.0 - a) * qs::qpochhammer_inf(a * q, q);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("Euler function") {
  for (double q : {0.05, 0.2}) CHECK(qs::euler_f_neg(q) == doctest::Approx(raw_f(q)).epsilon(1e-14));
  CHECK(qs::euler_f_neg(0.0) == 1.0);
  // near q = 1 the factor count grows but the value stays positive and tiny
  CHECK(qs::euler_f_neg(0.9) > 0.0);
  CHECK(qs::euler_f_neg(0.9) < 1e-5);
}

TEST_CASE("ratio of products survives where both factors overflow") {
  const double q = 0.3, t = 1e6;
  const double r = qs::qpochhammer_ratio(-t * q, -t, q);
  // (-tq;q)/(-t;q) = 1/(1 + t)
  CHECK(r == doctest::Approx(1.0 / (1.0 + t)).epsilon(1e-13));
}

TEST_CASE("Rogers-Ramanujan continued fraction: product against Lentz") {
  double prev = 0.0;
  for (double q : {0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5}) {
    const double u = qs::rr_cf_product(q);
    const auto cfv = cf::evaluate_cf(cf::rogers_ramanujan(q), quad::Tolerance(0.0, 1e-16));
    CHECK(cfv.converged);
    CHECK(std::abs(u - cfv.real()) < 1e-11);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    CHECK(u > prev);
    prev = u;
  }
  CHECK(std::abs(qs::rr_cf_product(0.1) -
                 cf::evaluate_cf(cf::rogers_ramanujan(0.1), quad::Tolerance(0.0, 1e-16)).real()) < 1e-12);
  CHECK(std::abs(qs::rr_cf_product(0.3) -
                 cf::evaluate_cf(cf::rogers_ramanujan(0.3), quad::Tolerance(0.0, 1e-16)).real()) < 1e-12);
  const double tiny = 1e-10;
  CHECK(qs::rr_cf_product(tiny) / std::pow(tiny, 0.2) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("theta quotients") {
  const double small = 1e-4;
  CHECK(std::abs(qs::lambda5(small) / small - 1.0) < 1e-3);
  CHECK(std::abs(qs::v14(small) / small - 1.0) < 5e-3);
  CHECK(std::abs(qs::v35(small) / small - 1.0) < 1e-3);
  for (double q : {0.1, 0.2}) {
    const double r = raw_f(std::pow(q, 5)) / raw_f(q);
    CHECK(qs::lambda5(q) == doctest::Approx(q * std::pow(r, 6)).epsilon(1e-13));
  }
  const double q = 0.03;
  const double v = q * std::pow(raw_f(q) * raw_f(std::pow(q, 14)) / (raw_f(q * q) * raw_f(std::pow(q, 7))), 4);
  CHECK(qs::v14(q) == doctest::Approx(v).epsilon(1e-13));
  const double w = q * raw_f(q) * raw_f(std::pow(q, 35)) / (raw_f(std::pow(q, 5)) * raw_f(std::pow(q, 7)));
  CHECK(qs::v35(q) == doctest::Approx(w).epsilon(1e-13));
}
