#include "rverify/qseries.hpp"

#include <cmath>
#include <string>

#include "rverify/errors.hpp"

namespace rverify::qs {

namespace {

constexpr double kCut = 1e-18;

void check_nome(double q, double ceiling, const char* who) {
  if (!(q >= 0.0 && q <= ceiling)) {
    throw DomainError(std::string(who) + ": nome outside [0, " + std::to_string(ceiling) + "]");
  }
}

// q < 1 exclusive
void check_open_nome(double q, const char* who) {
  if (!(q >= 0.0 && q < 1.0)) throw DomainError(std::string(who) + ": need 0 <= q < 1");
}

double product(double a, double q) {
  double p = 1.0;
  double term = a;
  const double stop = kCut * (1.0 - q);
  while (std::abs(term) >= stop) {
    p *= 1.0 - term;
    term *= q;
    if (q == 0.0) break;
  }
  return p;
}

}  // namespace

double qpochhammer_inf(double a, double q) {
  check_nome(q, kMaxNome, "qpochhammer_inf");
  return product(a, q);
}

double qpochhammer(double a, double q, std::size_t n) {
  check_open_nome(q, "qpochhammer");
  double p = 1.0;
  double term = a;
  for (std::size_t k = 0; k < n; ++k) {
    p *= 1.0 - term;
    term *= q;
  }
  return p;
}

double qpochhammer_ratio(double a, double b, double q) {
  check_open_nome(q, "qpochhammer_ratio");
  double p = 1.0;
  double ta = a;
  double tb = b;
  const double stop = kCut * (1.0 - q);
  while (std::abs(ta) >= stop || std::abs(tb) >= stop) {
    p *= (1.0 - ta) / (1.0 - tb);
    ta *= q;
    tb *= q;
    if (q == 0.0) break;
  }
  return p;
}

double euler_f_neg(double q) {
  check_open_nome(q, "euler_f_neg");
  return product(q, q);
}

double rr_cf_product(double q) {
  check_nome(q, kMaxNome, "rr_cf_product");
  if (q == 0.0) return 0.0;
  const double q5 = q * q * q * q * q;
  return std::pow(q, 0.2) * qpochhammer_ratio(q, q * q, q5) *
         qpochhammer_ratio(q * q * q * q, q * q * q, q5);
}

double lambda5(double q) {
  check_nome(q, kMaxNome, "lambda5");
  const double r = euler_f_neg(std::pow(q, 5)) / euler_f_neg(q);
  const double r3 = r * r * r;
  return q * r3 * r3;
}

double v14(double q) {
  check_nome(q, kMaxNome, "v14");
  const double r = euler_f_neg(q) * euler_f_neg(std::pow(q, 14)) /
                   (euler_f_neg(q * q) * euler_f_neg(std::pow(q, 7)));
  const double r2 = r * r;
  return q * r2 * r2;
}

double v35(double q) {
  check_nome(q, kMaxNome, "v35");
  return q * euler_f_neg(q) * euler_f_neg(std::pow(q, 35)) /
         (euler_f_neg(std::pow(q, 5)) * euler_f_neg(std::pow(q, 7)));
}

}  // namespace rverify::qs
