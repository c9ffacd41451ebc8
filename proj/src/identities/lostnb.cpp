#include "rverify/identities/lostnb.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rverify/errors.hpp"
#include "rverify/qseries.hpp"
#include "rverify/quadrature.hpp"
#include "rverify/specfun.hpp"

namespace rverify::lostnb {

using quad::QuadResult;
using quad::Tolerance;
using qs::euler_f_neg;

namespace {

const Tolerance kTight(1e-15, 1e-13);

double require(const QuadResult& r, const char* who) {
  if (!r.converged) throw ConvergenceError(std::string(who) + ": quadrature not converged");
  return r.real();
}

void check_nome(double q, double hi, const char* who) {
  if (!(q > 0.0 && q <= hi)) {
    throw DomainError(std::string(who) + ": need 0 < q <= " + std::to_string(hi));
  }
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

const GoldenConstants& golden_constants() {
  static const GoldenConstants k = [] {
    const double eps = 0.5 * (std::sqrt(5.0) + 1.0);
    const double s2 = std::numbers::sqrt2;
    return GoldenConstants{eps, std::pow(eps, -5.0) * std::pow(5.0, -1.5),
                           std::sqrt(13.0 + 16.0 * s2) / 7.0, (16.0 * s2 - 13.0) / (32.0 * s2)};
  }();
  return k;
}

double lemma_dlambda_residual(double q) {
  check_nome(q, 0.3, "lemma_dlambda");
  const quad::Derivative d = quad::differentiate(qs::lambda5, q, 0.25 * q);
  const double lhs = q * d.value;
  const double lam = qs::lambda5(q);
  const double f1 = euler_f_neg(q);
  const double f5 = euler_f_neg(ipow(q, 5));
  const double rhs =
      std::sqrt(q) * f1 * f1 * f5 * f5 * std::sqrt(lam * (1.0 + lam * (22.0 + 125.0 * lam)));
  return lhs / rhs - 1.0;
}

double entry5_lhs(double q) {
  check_nome(q, 0.3, "entry5");
  auto f = [](double t) {
    const double a = euler_f_neg(t);
    const double b = euler_f_neg(ipow(t, 5));
    return a * a * b * b / std::sqrt(t);
  };
  return std::pow(5.0, 0.75) * require(quad::integrate_singular(f, 0.0, q, kTight), "entry5");
}

double entry5_rhs1(double q) {
  check_nome(q, 0.3, "entry5");
  const GoldenConstants& k = golden_constants();
  const double c = std::pow(k.eps * qs::rr_cf_product(q), 2.5);
  if (c > 1.0) throw DomainError("entry5: (eps u)^{5/2} exceeds 1");
  return sf::elliptic_k(k.m5) - sf::elliptic_f(std::acos(c), k.m5);
}

double entry5_rhs2(double q) {
  check_nome(q, 0.3, "entry5");
  const double r = euler_f_neg(ipow(q, 5)) / euler_f_neg(q);
  const double phi = 2.0 * std::atan(std::pow(5.0, 0.75) * std::sqrt(q) * r * r * r);
  return sf::elliptic_f(phi, golden_constants().m5);
}

Entry5Residuals entry5_residuals(double q) {
  const double lhs = entry5_lhs(q);
  return {lhs - entry5_rhs1(q), lhs - entry5_rhs2(q)};
}

double entry5_constant_C(double q) {
  check_nome(q, 0.3, "entry5_constant_C");
  constexpr double kSplit = 0.9;
  const double f_split = euler_f_neg(kSplit);
  const double tail_bound = (1.0 - kSplit) * ipow(f_split, 4) * std::pow(kSplit, -1.5);
  if (!(tail_bound < 1e-12)) throw ConvergenceError("entry5_constant_C: tail bound too large");

  auto upper = [](double t) {
    const double a = euler_f_neg(t);
    const double b = euler_f_neg(ipow(t, 5));
    return ipow(a, 8) / ipow(b, 4) / (t * std::sqrt(t));
  };
  auto lower = [](double t) {
    const double a = euler_f_neg(t);
    const double b = euler_f_neg(ipow(t, 5));
    return ipow(b, 8) / ipow(a, 4) * std::sqrt(t);
  };
  const double i1 = require(quad::integrate_finite(upper, q, kSplit, kTight), "entry5_constant_C");
  const double i2 = require(quad::integrate_singular(lower, 0.0, q, kTight), "entry5_constant_C");

  const double u5 = ipow(qs::rr_cf_product(q), 5);
  const double r = euler_f_neg(ipow(q, 5)) / euler_f_neg(q);
  return (u5 + 1.0 / u5) * 2.0 * std::sqrt(q) * r * r * r - i1 - 125.0 * i2;
}

double entry14_lhs(double q) {
  check_nome(q, 0.05, "entry14");
  auto f = [](double t) {
    const double t2 = t * t;
    const double t7 = ipow(t, 7);
    return euler_f_neg(t) * euler_f_neg(t2) * euler_f_neg(t7) * euler_f_neg(t7 * t7);
  };
  return require(quad::integrate_finite(f, 0.0, q, kTight), "entry14");
}

double entry14_rhs(double q) {
  check_nome(q, 0.05, "entry14");
  const GoldenConstants& k = golden_constants();
  const double v = qs::v14(q);
  const double arg = k.c14 * (1.0 + v) / (1.0 - v);
  if (arg > 1.0) throw DomainError("entry14: c (1+v)/(1-v) exceeds 1");
  const double diff = sf::elliptic_f(std::acos(k.c14), k.m14) - sf::elliptic_f(std::acos(arg), k.m14);
  return diff / std::sqrt(8.0 * std::numbers::sqrt2);
}

double entry14_residual(double q) { return entry14_lhs(q) - entry14_rhs(q); }

double entry35_lhs(double q) {
  check_nome(q, 0.1, "entry35");
  auto f = [](double t) {
    const double t5 = ipow(t, 5);
    const double t7 = ipow(t, 7);
    return t * euler_f_neg(t) * euler_f_neg(t5) * euler_f_neg(t7) * euler_f_neg(ipow(t7, 5));
  };
  return require(quad::integrate_finite(f, 0.0, q, kTight), "entry35");
}

double entry35_rhs(double q) {
  check_nome(q, 0.1, "entry35");
  const double v = qs::v35(q);
  auto sextic = [](double t) {
    const double t3 = t * t * t;
    return 1.0 - 5.0 * t - 9.0 * t3 - 5.0 * t3 * t * t - t3 * t3;
  };
  for (int i = 0; i <= 256; ++i) {
    if (!(sextic(v * i / 256.0) > 0.0)) throw DomainError("entry35: sextic not positive on [0, v]");
  }
  auto f = [&sextic](double t) { return t / std::sqrt((1.0 + t - t * t) * sextic(t)); };
  return require(quad::integrate_finite(f, 0.0, v, kTight), "entry35");
}

double entry35_residual(double q) { return entry35_lhs(q) - entry35_rhs(q); }

}  // namespace rverify::lostnb
