#pragma once

#include <cstddef>
#include <functional>

#include "rverify/quadrature.hpp"

namespace rverify::cf {

struct CFTerm {
  double a;  // partial numerator a_n
  double b;  // partial denominator b_n
};

// b0 + a1/(b1 + a2/(b2 + ...)); terms(n) for n >= 1, deterministic in n.
struct CFGenerator {
  double b0 = 0.0;
  std::function<CFTerm(std::size_t)> terms;
};

inline constexpr std::size_t kMaxTerms = 100'000;

// Modified Lentz. error_estimate is |f_n - f_{n-1}|, which bounds the true
// error whenever all a_n, b_n > 0 (consecutive convergents then bracket the
// limit). Hitting max_terms leaves converged = false.
quad::QuadResult evaluate_cf(const CFGenerator& gen, quad::Tolerance tol = {},
                             std::size_t max_terms = kMaxTerms);

// The n-term truncation evaluated from the bottom up.
double evaluate_cf_backward(const CFGenerator& gen, std::size_t n);

// 1/(1 + 1^2/(1 + 1^2/(1 + 2^2/(1 + 2^2/(1 + 3^2/(1 + ...))))))
CFTerm letter_cf1_term(std::size_t n);
// 1/(1 + 1^3/(1 + 1^3/(3 + 2^3/(1 + 2^3/(5 + 3^3/(1 + 3^3/(7 + ...)))))))
CFTerm letter_cf2_term(std::size_t n);

CFGenerator letter_cf1();
CFGenerator letter_cf2();

// q^{1/5}/(1 + q/(1 + q^2/(1 + ...))), 0 < q < 1.
CFGenerator rogers_ramanujan(double q);

}  // namespace rverify::cf
