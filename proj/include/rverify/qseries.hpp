#pragma once

// q-Pochhammer products and the theta quotients built from the Euler
// function f(-q) = (q;q)_inf. The nome is real with 0 < q < 1; each function
// documents its own ceiling.

#include <cstddef>

namespace rverify::qs {

// Largest nome accepted by the general q-functions.
inline constexpr double kMaxNome = 0.5;

// (a;q)_inf = prod_{k>=0} (1 - a q^k), truncated once |a| q^k < 1e-18 (1 - q).
// Needs 0 <= q <= kMaxNome (q = 0 gives 1 - a).
double qpochhammer_inf(double a, double q);

// (a;q)_n, the finite product of n factors.
double qpochhammer(double a, double q, std::size_t n);

// (a;q)_inf / (b;q)_inf as one product of factor ratios. Stays finite where
// both products overflow separately, e.g. a = -t q, b = -t for large t.
// Accepts 0 <= q < 1.
double qpochhammer_ratio(double a, double b, double q);

// f(-q) = (q;q)_inf. Accepts 0 <= q < 1; near q = 1 the factor count grows
// like log(1e-18)/log q.
double euler_f_neg(double q);

// Rogers-Ramanujan continued fraction via its product form
// q^{1/5} (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)).
double rr_cf_product(double q);

// q f^6(-q^5) / f^6(-q)
double lambda5(double q);
// q (f(-q) f(-q^14) / (f(-q^2) f(-q^7)))^4
double v14(double q);
// q f(-q) f(-q^35) / (f(-q^5) f(-q^7))
double v35(double q);

}  // namespace rverify::qs
