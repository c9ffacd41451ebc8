#pragma once

// Numerical integration, series summation, root finding and differentiation.
//
// Every integrator returns a QuadResult rather than throwing on
// non-convergence: callers inspect `converged` and `error_estimate`.
// Integrands may be real- or complex-valued; a real integrand always yields a
// result whose imaginary part is exactly zero.

#include <complex>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace rverify::quad {

using cdouble = std::complex<double>;

struct Tolerance {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;

  // Throws DomainError unless both are >= 0 and at least one is > 0.
  Tolerance(double abs, double rel);
  Tolerance() = default;

  static Tolerance absolute(double abs) { return {abs, 0.0}; }
  static Tolerance relative(double rel) { return {0.0, rel}; }

  [[nodiscard]] double bound(double magnitude) const {
    return abs_tol + rel_tol * magnitude;
  }
  [[nodiscard]] bool accepts(double err, double magnitude) const {
    return err <= bound(magnitude);
  }
  // Both components multiplied by `factor`.
  [[nodiscard]] Tolerance scaled(double factor) const;
};

struct QuadResult {
  cdouble value{0.0, 0.0};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;

  [[nodiscard]] double real() const { return value.real(); }
  [[nodiscard]] double imag() const { return value.imag(); }
};

// Sum of two results: values and error estimates add, convergence is joint.
QuadResult operator+(const QuadResult& lhs, const QuadResult& rhs);
QuadResult operator-(const QuadResult& lhs, const QuadResult& rhs);
QuadResult operator*(double scale, const QuadResult& r);

// Type-erased integrand.
//
// Accepts either f(x) or f(x, offset). In the two-argument form `offset` is
// the signed distance from the nearest finite endpoint (x - a near the left
// end, x - b near the right end) computed without cancellation, so integrands
// with endpoint singularities can be evaluated accurately arbitrarily close
// to the endpoint.
class Integrand {
 public:
  template <class F>
    requires std::invocable<const F&, double> &&
             (!std::same_as<std::remove_cvref_t<F>, Integrand>)
  Integrand(F f)  // NOLINT(google-explicit-constructor)
      : fn_([f = std::move(f)](double x, double) -> cdouble {
          return cdouble(f(x));
        }),
        real_(is_real_result<std::invoke_result_t<const F&, double>>) {}

  template <class F>
    requires std::invocable<const F&, double, double> &&
             (!std::invocable<const F&, double>)
  Integrand(F f)  // NOLINT(google-explicit-constructor)
      : fn_([f = std::move(f)](double x, double off) -> cdouble {
          return cdouble(f(x, off));
        }),
        real_(is_real_result<std::invoke_result_t<const F&, double, double>>) {}

  cdouble operator()(double x, double offset) const {
    cdouble v = fn_(x, offset);
    if (real_) v.imag(0.0);
    return v;
  }
  cdouble operator()(double x) const { return (*this)(x, 0.0); }
  [[nodiscard]] bool is_real() const { return real_; }

 private:
  template <class R>
  static constexpr bool is_real_result =
      std::is_arithmetic_v<std::remove_cvref_t<R>>;

  std::function<cdouble(double, double)> fn_;
  bool real_;
};

using RealFunction = std::function<double(double)>;

struct FiniteOptions {
  std::size_t max_panels = 2000;
};

struct DoubleExponentialOptions {
  int max_level = 12;
  int min_level = 3;
};

// Adaptive Gauss-Kronrod 7/15 with global bisection of the worst panel.
// Pre: a < b.
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            Tolerance tol = {}, FiniteOptions opts = {});

// Tanh-sinh rule; integrable algebraic/logarithmic endpoint singularities.
QuadResult integrate_singular(const Integrand& f, double a, double b,
                              Tolerance tol = {},
                              DoubleExponentialOptions opts = {});

// [a, inf) via x = a + exp(pi/2 sinh t). Also tolerates an integrable
// singularity at a. Integrands that fail a tail-decay probe are reported as
// not converged.
QuadResult integrate_semi_infinite(const Integrand& f, double a,
                                   Tolerance tol = {},
                                   DoubleExponentialOptions opts = {});

enum class Acceleration {
  kNone,
  kAitken,  // iterated Aitken delta-squared; alternating panel sums
  kLevin,   // Levin u-transform; also handles monotone algebraic tails
};

struct OscillatoryOptions {
  Acceleration acceleration = Acceleration::kAitken;
  std::size_t min_panels = 8;
  std::size_t max_panels = 400;
};

// Integral from zeros(0) to infinity. `zeros(k)` must be increasing; the
// integral over [zeros(k), zeros(k+1)] is computed by integrate_finite and
// the partial sums are accelerated.
QuadResult integrate_oscillatory(const Integrand& f,
                                 const std::function<double(std::size_t)>& zeros,
                                 Tolerance tol = {},
                                 OscillatoryOptions opts = {});

// Integral over the real line as [0, inf) for f(x) and f(-x).
QuadResult integrate_line(const Integrand& f, Tolerance tol = {},
                          DoubleExponentialOptions opts = {});

// Oscillatory variant: `zeros_right` enumerates sign changes of f on x >= 0
// starting at 0; `zeros_left` enumerates |x| of sign changes on x <= 0
// starting at 0. The gap [0, zeros(0)] is integrated directly.
QuadResult integrate_line(const Integrand& f,
                          const std::function<double(std::size_t)>& zeros_right,
                          const std::function<double(std::size_t)>& zeros_left,
                          Tolerance tol = {}, OscillatoryOptions opts = {});

// Brent's bracketing root finder. Throws DomainError without a sign change
// and ConvergenceError if the iteration cap is reached.
double find_root(const RealFunction& f, double lo, double hi,
                 Tolerance tol = Tolerance(1e-15, 1e-15));

struct Derivative {
  double value = 0.0;
  double error = 0.0;
  // False when the extrapolation table never improved on its first entry.
  bool reliable = true;
};

// Central differences extrapolated over a shrinking step ladder (Ridders).
Derivative differentiate(const RealFunction& f, double x, double h0);

struct SeriesOptions {
  std::size_t start = 1;
  std::size_t max_terms = 1'000'000;
  Acceleration acceleration = Acceleration::kNone;
  // When set, terms are assumed to decay algebraically and the remainder
  // after N terms to behave like N^{-p}(c0 + c1/N + ...). Partial sums at
  // N = 16, 32, 64, ... are then extrapolated with those exponents.
  std::optional<double> algebraic_tail_exponent;
};

QuadResult sum_series(const std::function<cdouble(std::size_t)>& term,
                      Tolerance tol = {}, SeriesOptions opts = {});

struct Extrapolated {
  double value = 0.0;
  double error = 0.0;
};

// Iterated Aitken delta-squared on the whole sequence.
Extrapolated aitken_iterated(std::span<const double> partial_sums);

// Levin u-transform of partial sums S_0..S_n (terms S_k - S_{k-1}).
Extrapolated levin_u(std::span<const double> partial_sums);
// Same transform on a trailing window: partial_sums[j] is S_{first_index + j}
// and previous_sum is S_{first_index - 1} (0 when first_index = 0). The
// remainder model needs the true term index, not the window position.
Extrapolated levin_u(std::span<const double> partial_sums, std::size_t first_index,
                     double previous_sum);

// Richardson extrapolation of values sampled at h_k = h_0 / ratio^k to h = 0
// with error expansion h^{p}, h^{p+step}, h^{p+2 step}, ...
Extrapolated richardson(std::span<const double> values, double ratio,
                        double first_exponent, double exponent_step = 1.0);

}  // namespace rverify::quad
