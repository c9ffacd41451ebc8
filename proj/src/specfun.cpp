#include "rverify/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rverify/errors.hpp"
#include "rverify/quadrature.hpp"

namespace rverify::sf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640561764;

// B_{2k} for k = 1..10.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,          -1.0 / 30.0,          1.0 / 42.0,
    -1.0 / 30.0,        5.0 / 66.0,           -691.0 / 2730.0,
    7.0 / 6.0,          -3617.0 / 510.0,      43867.0 / 798.0,
    -174611.0 / 330.0};

bool is_nonpositive_integer(cdouble z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Stirling series, valid for Re z >= 10.
cdouble stirling(cdouble z) {
  const cdouble inv = 1.0 / z;
  const cdouble inv2 = inv * inv;
  cdouble corr = 0.0;
  cdouble p = inv;
  for (int k = 1; k <= 9; ++k) {
    corr += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + kLnSqrt2Pi + corr;
}

}  // namespace

double sin_pi(double x) {
  if (x == std::floor(x)) return 0.0;
  double r = std::fmod(x, 2.0);  // r in (-2, 2)
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  // r in [-1, 1]; fold to [-1/2, 1/2] for accuracy
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

cdouble sin_pi(cdouble z) {
  const double x = z.real();
  const double y = kPi * z.imag();
  const double cx = std::abs(x - std::round(x)) == 0.5 ? 0.0 : std::cos(kPi * std::remainder(x, 2.0));
  return {sin_pi(x) * std::cosh(y), cx * std::sinh(y)};
}

cdouble ln_gamma(cdouble z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("ln_gamma: pole at " + std::to_string(z.real()));
  }
  if (z.real() < -1000.0) throw UnsupportedRange("ln_gamma: implemented for Re z >= -1000");
  // Upward recurrence to Re z >= 10. Summing args of the factors (not the arg
  // of their product) keeps the branch cut on the negative real axis only.
  double log_abs = 0.0;
  double arg_sum = 0.0;
  cdouble w = z;
  for (; w.real() < 10.0; w += 1.0) {
    log_abs += std::log(std::abs(w));
    arg_sum += std::arg(w);
  }
  const cdouble s = stirling(w);
  return {s.real() - log_abs, s.imag() - arg_sum};
}

cdouble gamma(cdouble z) {
  const cdouble l = ln_gamma(z);
  if (l.real() > 709.0) throw OverflowError("gamma: result overflows");
  return std::exp(l);
}

SignedLog log_recip_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return {-std::numeric_limits<double>::infinity(), 0};
  if (x >= 0.5) {
    const cdouble l = ln_gamma(cdouble(x, 0.0));
    return {-l.real(), 1};
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  const double s = sin_pi(x);
  const double lg = ln_gamma(cdouble(1.0 - x, 0.0)).real();
  return {std::log(std::abs(s)) + lg - std::log(kPi), s > 0.0 ? 1 : -1};
}

double recip_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x >= 0.5) {
    if (x < 170.0) return 1.0 / std::tgamma(x);
    return std::exp(-ln_gamma(cdouble(x, 0.0)).real());
  }
  const double s = sin_pi(x);
  if (1.0 - x < 170.0) return s * std::tgamma(1.0 - x) / kPi;
  const SignedLog l = log_recip_gamma(x);
  if (l.log_abs > 709.0) throw OverflowError("recip_gamma: result overflows");
  return l.sign * std::exp(l.log_abs);
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: need x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double p = inv2;
  double series = 0.0;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - series;
}

double bessel_j_scaled(double nu, double x) {
  // sum_k (-1)^k z^k / (k! Gamma(k + nu + 1)) * 2^{-nu}, z = x^2/4. The first
  // nonzero term comes from the log form (1/Gamma at large negative arguments
  // cannot overflow an intermediate); later terms follow by the exact ratio
  // -z/(k (k + nu)), which keeps each term within a few ulps.
  const double z = 0.25 * x * x;
  int k0 = 0;
  while (log_recip_gamma(k0 + nu + 1.0).sign == 0) ++k0;  // only for integer nu < 0
  const SignedLog r = log_recip_gamma(k0 + nu + 1.0);
  const double log_z = z > 0.0 ? std::log(z) : 0.0;
  if (z == 0.0 && k0 > 0) return 0.0;
  double term = r.sign * std::exp(-nu * std::numbers::ln2 + k0 * log_z - std::lgamma(k0 + 1.0) + r.log_abs);
  if (k0 % 2 == 1) term = -term;
  double sum = term;
  for (int k = k0 + 1; k < k0 + 500; ++k) {
    term *= -z / (k * (k + nu));
    sum += term;
    // terms shrink monotonically once k exceeds both -nu and z
    if (k > -nu && k > z && std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    if (z == 0.0) return sum;
  }
  throw ConvergenceError("bessel_j_scaled: series did not terminate");
}

double bessel_j(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_j: need x > 0");
  if (x > 12.0 || nu < -5.0 || nu > 40.0) {
    throw UnsupportedRange("bessel_j: implemented for 0 < x <= 12, -5 <= nu <= 40");
  }
  return std::pow(x, nu) * bessel_j_scaled(nu, x);
}

namespace {

double li2_series(double x) {
  // |x| <= 1/2
  double sum = 0.0;
  double p = x;
  for (int n = 1; n < 200; ++n) {
    const double t = p / (static_cast<double>(n) * n);
    sum += t;
    if (std::abs(t) < 1e-17 * std::abs(sum)) break;
    p *= x;
  }
  return sum;
}

}  // namespace

double li2(double x) {
  constexpr double kZeta2 = kPi * kPi / 6.0;
  if (!(x <= 1.0)) throw DomainError("li2: need x <= 1");
  if (x == 1.0) return kZeta2;
  if (x == 0.0) return 0.0;
  if (x > 0.5) {
    return kZeta2 - std::log(x) * std::log1p(-x) - li2_series(1.0 - x);
  }
  if (x >= -0.5) return li2_series(x);
  if (x >= -1.0) {
    // Landen: Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2, with x/(x-1) in [1/3, 1/2].
    const double l = std::log1p(-x);
    return -li2_series(x / (x - 1.0)) - 0.5 * l * l;
  }
  // Inversion: Li2(x) = -pi^2/6 - log^2(-x)/2 - Li2(1/x), 1/x in [-1, 0).
  const double l = std::log(-x);
  return -kZeta2 - 0.5 * l * l - li2(1.0 / x);
}

double agm(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0)) throw DomainError("agm: need a > 0, b >= 0");
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    if (std::abs(an - bn) <= 4.0 * std::numeric_limits<double>::epsilon() * an) return an;
    a = an;
    b = bn;
  }
  return a;
}

double elliptic_k(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw DomainError("elliptic_k: need 0 <= m < 1");
  return 0.5 * kPi / agm(1.0, std::sqrt(1.0 - m));
}

double elliptic_f(double phi, double m) {
  if (!(m >= 0.0 && m < 1.0)) throw DomainError("elliptic_f: need 0 <= m < 1");
  if (phi == 0.0) return 0.0;
  if (phi < 0.0) return -elliptic_f(-phi, m);
  if (m == 0.0) return phi;
  auto f = [m](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - m * s * s);
  };
  const quad::QuadResult r = quad::integrate_finite(f, 0.0, phi, quad::Tolerance(1e-16, 1e-13));
  if (!r.converged) throw ConvergenceError("elliptic_f: quadrature failed");
  return r.real();
}

cdouble zeta(cdouble s) {
  if (s == cdouble(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (!(s.real() > -2.0)) throw UnsupportedRange("zeta: implemented for Re s > -2");
  const int n_terms = std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
  const double big_n = n_terms;
  cdouble sum = 0.0;
  for (int n = 1; n < n_terms; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double log_n = std::log(big_n);
  const cdouble n_pow = std::exp(-s * log_n);  // N^{-s}
  sum += n_pow * big_n / (s - 1.0) + 0.5 * n_pow;
  // Bernoulli corrections B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  cdouble rising = s;      // s(s+1)...(s+2k-2)
  double fact = 2.0;       // (2k)!
  cdouble npow = n_pow / big_n;
  for (int k = 1; k <= 8; ++k) {
    sum += kBernoulli[k - 1] / fact * rising * npow;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    npow /= big_n * big_n;
  }
  return sum;
}

cdouble xi(cdouble s) {
  if (s == cdouble(0.0, 0.0) || s == cdouble(1.0, 0.0)) return 0.5;
  const cdouble log_part = ln_gamma(0.5 * s) - 0.5 * s * std::log(kPi);
  return 0.5 * s * (s - 1.0) * std::exp(log_part) * zeta(s);
}

cdouble xi_big(cdouble t) { return xi(cdouble(0.5, 0.0) + cdouble(0.0, 1.0) * t); }

double pochhammer(double a, int n) {
  if (n < 0) throw DomainError("pochhammer: need n >= 0");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

}  // namespace rverify::sf
