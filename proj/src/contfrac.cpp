#include "rverify/contfrac.hpp"

#include <cmath>

#include "rverify/errors.hpp"

namespace rverify::cf {

namespace {
constexpr double kTiny = 1e-30;
}

quad::QuadResult evaluate_cf(const CFGenerator& gen, quad::Tolerance tol,
                             std::size_t max_terms) {
  double f = gen.b0 == 0.0 ? kTiny : gen.b0;
  double c = f;
  double d = 0.0;
  quad::QuadResult out;
  for (std::size_t n = 1; n <= max_terms; ++n) {
    const CFTerm t = gen.terms(n);
    d = t.b + t.a * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = t.b + t.a / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    const double prev = f;
    f *= delta;
    out.evaluations = n;
    if (!std::isfinite(f)) break;
    // The first step replaces the tiny seed, so its change means nothing.
    if (n == 1 && gen.b0 == 0.0) continue;
    out.error_estimate = std::abs(f - prev);
    if (tol.accepts(out.error_estimate, std::abs(f))) {
      out.converged = true;
      break;
    }
  }
  out.value = f;
  return out;
}

double evaluate_cf_backward(const CFGenerator& gen, std::size_t n) {
  double tail = 0.0;
  for (std::size_t k = n; k >= 1; --k) {
    const CFTerm t = gen.terms(k);
    tail = t.a / (t.b + tail);
  }
  return gen.b0 + tail;
}

CFTerm letter_cf1_term(std::size_t n) {
  if (n == 0) throw DomainError("letter_cf1_term: n starts at 1");
  if (n == 1) return {1.0, 1.0};
  const double k = static_cast<double>(n / 2);  // 1, 1, 2, 2, 3, 3, ...
  return {k * k, 1.0};
}

CFTerm letter_cf2_term(std::size_t n) {
  if (n == 0) throw DomainError("letter_cf2_term: n starts at 1");
  if (n == 1) return {1.0, 1.0};
  const double k = static_cast<double>(n / 2);
  // denominators 1, 1, 3, 1, 5, 1, 7, ...: odd n carries n itself
  const double b = n % 2 == 0 ? 1.0 : static_cast<double>(n);
  return {k * k * k, b};
}

CFGenerator letter_cf1() { return {0.0, letter_cf1_term}; }
CFGenerator letter_cf2() { return {0.0, letter_cf2_term}; }

CFGenerator rogers_ramanujan(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("rogers_ramanujan: need 0 < q < 1");
  const double head = std::pow(q, 0.2);
  return {0.0, [q, head](std::size_t n) -> CFTerm {
            if (n == 1) return {head, 1.0};
            return {std::pow(q, static_cast<double>(n - 1)), 1.0};
          }};
}

}  // namespace rverify::cf
