#include "rverify/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "rverify/errors.hpp"

namespace rverify::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  cdouble value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

double qk15_error(double kronrod, double gauss, double resabs, double resasc,
                  double half) {
  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return err;
}

Panel qk15(const Integrand& f, double a, double b, std::size_t& evals) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<cdouble, 15> fv;
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }
  evals += 15;

  cdouble resk = fv[7] * kWgk[7];
  cdouble resg = fv[7] * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const cdouble pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const cdouble mean = resk * 0.5;

  auto part_error = [&](auto part) {
    double resabs = kWgk[7] * std::abs(part(fv[7]));
    double resasc = kWgk[7] * std::abs(part(fv[7]) - part(mean));
    for (int j = 0; j < 7; ++j) {
      resabs += kWgk[j] * (std::abs(part(fv[j])) + std::abs(part(fv[14 - j])));
      resasc += kWgk[j] * (std::abs(part(fv[j]) - part(mean)) +
                           std::abs(part(fv[14 - j]) - part(mean)));
    }
    const double ah = std::abs(half);
    return qk15_error(part(resk), part(resg), resabs * ah, resasc * ah, half);
  };
  const double err_re = part_error([](cdouble z) { return z.real(); });
  const double err_im = part_error([](cdouble z) { return z.imag(); });
  return {a, b, resk * half, std::hypot(err_re, err_im)};
}

bool finite(cdouble z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Double-exponential rule over t in R with a mapping supplied as
// node(t) -> (x, offset, weight). Levels halve the step starting at h = 1.
template <class Map>
QuadResult double_exponential(const Integrand& f, const Map& node, Tolerance tol,
                              DoubleExponentialOptions opts, double t_limit) {
  QuadResult out;
  std::size_t evals = 0;
  bool bad_value = false;

  auto eval = [&](double t, double& abs_acc) -> cdouble {
    const auto [x, offset, w] = node(t);
    if (!(w > 0.0) || !std::isfinite(x)) return {0.0, 0.0};
    ++evals;
    const cdouble v = f(x, offset);
    if (!finite(v)) {
      // Far in the tails the weight is negligible; non-finite values there
      // come from underflow/overflow inside the integrand.
      if (std::abs(t) < 3.0) bad_value = true;
      return {0.0, 0.0};
    }
    abs_acc += w * std::abs(v);
    return w * v;
  };

  // Level 0 on the integer grid, also fixing the effective t-range.
  double abs_sum = 0.0;
  cdouble sum = eval(0.0, abs_sum);
  double max_contrib = std::abs(sum);
  double t_lo = 0.0;
  double t_hi = 0.0;
  for (int dir : {-1, 1}) {
    int quiet = 0;
    double last = 0.0;
    for (int j = 1; j <= static_cast<int>(std::floor(t_limit)); ++j) {
      const double t = dir * j;
      double a0 = 0.0;
      const cdouble c = eval(t, a0);
      abs_sum += a0;
      sum += c;
      max_contrib = std::max(max_contrib, std::abs(c));
      last = t;
      if (std::abs(c) <= 1e-30 * max_contrib) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
    // Stay on the integer lattice so refinement points never repeat nodes.
    (dir < 0 ? t_lo : t_hi) = last + dir * 1.0;
  }

  double h = 1.0;
  cdouble estimate = sum * h;
  cdouble previous = estimate;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= opts.max_level; ++level) {
    h *= 0.5;
    for (double t = t_lo + h; t < t_hi; t += 2.0 * h) {
      double a0 = 0.0;
      sum += eval(t, a0);
      abs_sum += a0;
    }
    previous = estimate;
    estimate = sum * h;
    const double roundoff = 20.0 * kEps * abs_sum * h;
    err = std::max(std::abs(estimate - previous), roundoff);
    if (level >= opts.min_level && tol.accepts(err, std::abs(estimate))) {
      out.converged = true;
      break;
    }
  }
  out.value = estimate;
  if (f.is_real()) out.value.imag(0.0);
  out.error_estimate = err;
  out.evaluations = evals;
  if (bad_value) out.converged = false;
  return out;
}

struct Node {
  double x;
  double offset;
  double weight;
};

}  // namespace

Tolerance::Tolerance(double abs, double rel) : abs_tol(abs), rel_tol(rel) {
  if (!(abs >= 0.0) || !(rel >= 0.0) || (abs == 0.0 && rel == 0.0)) {
    throw DomainError("Tolerance: need abs, rel >= 0 with one positive");
  }
}

Tolerance Tolerance::scaled(double factor) const {
  return {abs_tol * factor, rel_tol * factor};
}

QuadResult operator+(const QuadResult& lhs, const QuadResult& rhs) {
  return {lhs.value + rhs.value, lhs.error_estimate + rhs.error_estimate,
          lhs.evaluations + rhs.evaluations, lhs.converged && rhs.converged};
}

QuadResult operator-(const QuadResult& lhs, const QuadResult& rhs) {
  return {lhs.value - rhs.value, lhs.error_estimate + rhs.error_estimate,
          lhs.evaluations + rhs.evaluations, lhs.converged && rhs.converged};
}

QuadResult operator*(double scale, const QuadResult& r) {
  return {scale * r.value, std::abs(scale) * r.error_estimate, r.evaluations,
          r.converged};
}

QuadResult integrate_finite(const Integrand& f, double a, double b,
                            Tolerance tol, FiniteOptions opts) {
  if (!(a < b)) throw DomainError("integrate_finite: need a < b");
  std::size_t evals = 0;
  std::priority_queue<Panel> panels;
  Panel first = qk15(f, a, b, evals);
  cdouble total = first.value;
  double total_err = first.error;
  panels.push(first);

  QuadResult out;
  while (true) {
    if (tol.accepts(total_err, std::abs(total))) {
      out.converged = true;
      break;
    }
    if (panels.size() >= opts.max_panels) break;
    Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) break;  // interval exhausted
    panels.pop();
    Panel left = qk15(f, worst.a, mid, evals);
    Panel right = qk15(f, mid, worst.b, evals);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    // Re-sum periodically to shed accumulated rounding in the running totals.
    if (panels.size() % 64 == 0) {
      auto copy = panels;
      total = {0.0, 0.0};
      total_err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }
  if (!finite(total)) out.converged = false;
  out.value = total;
  if (f.is_real()) out.value.imag(0.0);
  out.error_estimate = std::max(total_err, 0.0);
  out.evaluations = evals;
  return out;
}

QuadResult integrate_singular(const Integrand& f, double a, double b,
                              Tolerance tol, DoubleExponentialOptions opts) {
  if (!(a < b)) throw DomainError("integrate_singular: need a < b");
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);
  auto node = [=](double t) -> Node {
    const double u = 0.5 * kPi * std::sinh(t);
    const double au = std::abs(u);
    if (au > 354.0) return {center, 0.0, 0.0};
    const double e = std::exp(-2.0 * au);
    // distance to the nearer endpoint, free of cancellation
    const double d = 2.0 * half * e / (1.0 + e);
    if (d == 0.0) return {center, 0.0, 0.0};
    const double sech = 2.0 * std::exp(-au) / (1.0 + e);
    const double w = half * 0.5 * kPi * std::cosh(t) * sech * sech;
    if (u < 0.0) return {a + d, d, w};
    return {b - d, -d, w};
  };
  return double_exponential(f, node, tol, opts, 6.5);
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, Tolerance tol,
                                   DoubleExponentialOptions opts) {
  auto node = [=](double t) -> Node {
    const double u = 0.5 * kPi * std::sinh(t);
    if (u > 700.0 || u < -700.0) return {a, 0.0, 0.0};
    const double e = std::exp(u);
    return {a + e, e, 0.5 * kPi * std::cosh(t) * e};
  };
  QuadResult r = double_exponential(f, node, tol, opts, 6.8);

  // Tail probe: |x f(x)| must shrink over widely separated abscissae.
  const double scale = std::max(1.0, std::abs(a));
  double prev = -1.0;
  bool decaying = true;
  for (double k : {1e4, 1e8, 1e12}) {
    const double x = a + k * scale;
    const double m = std::abs(x * f(x, x - a));
    r.evaluations += 1;
    if (!std::isfinite(m)) continue;
    if (prev >= 0.0 && m > 1e-300 && m >= prev) decaying = false;
    prev = m;
  }
  if (!decaying) r.converged = false;
  return r;
}

Extrapolated aitken_iterated(std::span<const double> s) {
  std::vector<double> cur(s.begin(), s.end());
  if (cur.empty()) return {};
  if (cur.size() < 3) {
    const double e = cur.size() == 2 ? std::abs(cur[1] - cur[0]) : 0.0;
    return {cur.back(), e};
  }
  double prev_best = cur.back();
  double best = cur.back();
  while (cur.size() >= 3) {
    std::vector<double> next;
    next.reserve(cur.size() - 2);
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      const double d1 = cur[i + 1] - cur[i];
      const double d2 = cur[i + 2] - cur[i + 1];
      const double den = d2 - d1;
      if (den == 0.0 || !std::isfinite(d1 * d2 / den)) {
        next.push_back(cur[i + 2]);
      } else {
        next.push_back(cur[i + 2] - d2 * d2 / den);
      }
    }
    prev_best = best;
    best = next.back();
    cur = std::move(next);
  }
  return {best, std::abs(best - prev_best)};
}

Extrapolated levin_u(std::span<const double> s) { return levin_u(s, 0, 0.0); }

Extrapolated levin_u(std::span<const double> s, std::size_t first_index, double previous_sum) {
  const std::size_t n = s.size();
  if (n < 3) return aitken_iterated(s);
  const double beta = 1.0 + static_cast<double>(first_index);
  auto transform = [&](std::size_t count) {
    const std::size_t k = count - 1;
    double num = 0.0;
    double den = 0.0;
    double binom = 1.0;
    for (std::size_t j = 0; j <= k; ++j) {
      const double a = s[j] - (j == 0 ? previous_sum : s[j - 1]);
      if (a == 0.0) return std::numeric_limits<double>::quiet_NaN();
      const double omega = (beta + static_cast<double>(j)) * a;
      const double c = (j % 2 == 0 ? 1.0 : -1.0) * binom *
                       std::pow((beta + j) / (beta + k), static_cast<double>(k) - 1.0);
      num += c * s[j] / omega;
      den += c / omega;
      binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
    return num / den;
  };
  const double last = transform(n);
  const double before = transform(n - 1);
  if (!std::isfinite(last) || !std::isfinite(before)) return aitken_iterated(s);
  return {last, std::abs(last - before)};
}

Extrapolated richardson(std::span<const double> values, double ratio,
                        double first_exponent, double exponent_step) {
  const std::size_t n = values.size();
  if (n == 0) return {};
  std::vector<double> row(values.begin(), values.end());
  double best = row.back();
  double err = n > 1 ? std::abs(row[n - 1] - row[n - 2]) : 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double factor =
        std::pow(ratio, first_exponent + exponent_step * static_cast<double>(j - 1));
    std::vector<double> next;
    for (std::size_t i = 1; i < row.size(); ++i) {
      next.push_back(row[i] + (row[i] - row[i - 1]) / (factor - 1.0));
    }
    const double candidate = next.back();
    err = std::abs(candidate - best);
    best = candidate;
    row = std::move(next);
  }
  return {best, err};
}

QuadResult integrate_oscillatory(const Integrand& f,
                                 const std::function<double(std::size_t)>& zeros,
                                 Tolerance tol, OscillatoryOptions opts) {
  QuadResult out;
  std::vector<double> re_sums;
  std::vector<double> im_sums;
  cdouble partial{0.0, 0.0};
  double panel_err = 0.0;
  bool panels_ok = true;

  auto accelerate = [&](const std::vector<double>& all, std::size_t start) -> Extrapolated {
    std::span<const double> s(all.data() + start, all.size() - start);
    switch (opts.acceleration) {
      case Acceleration::kNone:
        return {s.back(), s.size() > 1 ? std::abs(s.back() - s[s.size() - 2]) : 0.0};
      case Acceleration::kAitken:
        return aitken_iterated(s);
      case Acceleration::kLevin:
        return levin_u(s, start, start == 0 ? 0.0 : all[start - 1]);
    }
    return {};
  };

  double lo = zeros(0);
  double prev_estimate_re = std::numeric_limits<double>::quiet_NaN();
  double prev_estimate_im = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 1; k <= opts.max_panels; ++k) {
    const double hi = zeros(k);
    if (!(hi > lo)) throw DomainError("integrate_oscillatory: zeros must increase");
    // Panel accuracy is budgeted against the running total, not the panel.
    const Tolerance panel_tol =
        k == 1 ? tol.scaled(0.05)
               : Tolerance(0.05 * tol.bound(std::abs(partial)), 0.05 * tol.rel_tol);
    QuadResult p = integrate_finite(f, lo, hi, panel_tol);
    panels_ok = panels_ok && p.converged;
    out.evaluations += p.evaluations;
    panel_err += p.error_estimate;
    partial += p.value;
    re_sums.push_back(partial.real());
    im_sums.push_back(partial.imag());
    lo = hi;

    // Accelerate over a trailing window; long windows amplify rounding in the
    // partial sums, and Levin's amplification grows fastest.
    const std::size_t max_window = opts.acceleration == Acceleration::kLevin ? 10 : 16;
    const std::size_t window = std::min<std::size_t>(re_sums.size(), max_window);
    const auto tail_start = re_sums.size() - window;
    const Extrapolated er = accelerate(re_sums, tail_start);
    const Extrapolated ei = f.is_real() ? Extrapolated{} : accelerate(im_sums, tail_start);
    const cdouble estimate{er.value, ei.value};
    double accel_err = std::hypot(er.error, ei.error);
    if (std::isfinite(prev_estimate_re)) {
      accel_err = std::max(accel_err, std::hypot(estimate.real() - prev_estimate_re,
                                                 estimate.imag() - prev_estimate_im));
    }
    prev_estimate_re = estimate.real();
    prev_estimate_im = estimate.imag();
    const double err = accel_err + panel_err;
    if (!std::isfinite(accel_err)) break;
    // Acceleration degrades once the window sits far out, so an unconverged
    // run reports its best estimate rather than its last.
    if (k == 1 || err <= out.error_estimate) {
      out.value = estimate;
      out.error_estimate = err;
    }
    if (k >= opts.min_panels && tol.accepts(err, std::abs(estimate))) {
      out.value = estimate;
      out.error_estimate = err;
      out.converged = panels_ok;
      break;
    }
  }
  if (f.is_real()) out.value.imag(0.0);
  return out;
}

QuadResult integrate_line(const Integrand& f, Tolerance tol,
                          DoubleExponentialOptions opts) {
  Integrand mirrored([&f](double x, double off) { return f(-x, -off); });
  const Tolerance half = tol.scaled(0.5);
  QuadResult r = integrate_semi_infinite(f, 0.0, half, opts) +
                 integrate_semi_infinite(mirrored, 0.0, half, opts);
  if (f.is_real()) r.value.imag(0.0);
  return r;
}

QuadResult integrate_line(const Integrand& f,
                          const std::function<double(std::size_t)>& zeros_right,
                          const std::function<double(std::size_t)>& zeros_left,
                          Tolerance tol, OscillatoryOptions opts) {
  Integrand mirrored([&f](double x) { return f(-x); });
  const Tolerance part = tol.scaled(0.25);
  QuadResult r = integrate_oscillatory(f, zeros_right, part, opts) +
                 integrate_oscillatory(mirrored, zeros_left, part, opts);
  const double zr = zeros_right(0);
  const double zl = zeros_left(0);
  if (zr > 0.0) r = r + integrate_finite(f, 0.0, zr, part);
  if (zl > 0.0) r = r + integrate_finite(mirrored, 0.0, zl, part);
  if (f.is_real()) r.value.imag(0.0);
  return r;
}

double find_root(const RealFunction& f, double lo, double hi, Tolerance tol) {
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (!(fa * fb < 0.0)) throw DomainError("find_root: no sign change on bracket");

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < 300; ++iter) {
    if (fb * fc > 0.0) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * kEps * std::abs(b) + 0.5 * tol.bound(std::abs(b));
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // secant or inverse quadratic interpolation
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = d;
      }
    } else {
      d = m;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (m > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw ConvergenceError("find_root: iteration cap reached");
}

Derivative differentiate(const RealFunction& f, double x, double h0) {
  if (!(h0 > 0.0)) throw DomainError("differentiate: need h0 > 0");
  constexpr int kTab = 12;
  constexpr double kCon = 1.4;
  constexpr double kCon2 = kCon * kCon;
  constexpr double kSafe = 2.0;
  std::array<std::array<double, kTab>, kTab> table{};
  double h = h0;
  table[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
  Derivative out{table[0][0], std::numeric_limits<double>::max(), false};
  for (int i = 1; i < kTab; ++i) {
    h /= kCon;
    table[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
    double fac = kCon2;
    for (int j = 1; j <= i; ++j) {
      table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
      fac *= kCon2;
      const double errt = std::max(std::abs(table[j][i] - table[j - 1][i]),
                                   std::abs(table[j][i] - table[j - 1][i - 1]));
      if (errt <= out.error) {
        out.error = errt;
        out.value = table[j][i];
        out.reliable = true;
      }
    }
    if (std::abs(table[i][i] - table[i - 1][i - 1]) >= kSafe * out.error) break;
  }
  if (!out.reliable) out.error = std::abs(table[0][1] - table[0][0]);
  return out;
}

QuadResult sum_series(const std::function<cdouble(std::size_t)>& term,
                      Tolerance tol, SeriesOptions opts) {
  QuadResult out;
  if (opts.algebraic_tail_exponent) {
    const double p = *opts.algebraic_tail_exponent;
    std::vector<double> re;
    std::vector<double> im;
    cdouble s{0.0, 0.0};
    std::size_t n = opts.start;
    std::size_t count = 0;
    std::size_t target = 16;
    Extrapolated prev_r{};
    Extrapolated prev_i{};
    while (target <= opts.max_terms) {
      for (; count < target; ++count, ++n) s += term(n);
      out.evaluations = count;
      re.push_back(s.real());
      im.push_back(s.imag());
      if (re.size() >= 3) {
        const Extrapolated r = richardson(re, 2.0, p);
        const Extrapolated i = richardson(im, 2.0, p);
        out.value = {r.value, i.value};
        out.error_estimate = std::max(std::hypot(r.error, i.error),
                                      std::hypot(r.value - prev_r.value,
                                                 i.value - prev_i.value));
        prev_r = r;
        prev_i = i;
        if (re.size() >= 4 && tol.accepts(out.error_estimate, std::abs(out.value))) {
          out.converged = true;
          return out;
        }
      }
      target *= 2;
    }
    return out;
  }

  std::vector<double> history;
  std::vector<double> re_sums;
  std::vector<double> im_sums;
  cdouble s{0.0, 0.0};
  constexpr std::size_t kWindow = 8;
  for (std::size_t i = 0; i < opts.max_terms; ++i) {
    const cdouble t = term(opts.start + i);
    out.evaluations += 1;
    if (!finite(t)) break;
    s += t;
    history.push_back(std::abs(t));
    re_sums.push_back(s.real());
    im_sums.push_back(s.imag());
    out.value = s;
    if (history.size() < 2 * kWindow) continue;

    const auto end = history.end();
    const double recent = *std::max_element(end - kWindow, end);
    const double older = *std::max_element(end - 2 * kWindow, end - kWindow);
    double tail;
    if (recent == 0.0) {
      tail = 0.0;
    } else if (older > 0.0 && recent < older) {
      const double rho = std::pow(recent / older, 1.0 / kWindow);
      tail = recent * rho / (1.0 - rho);
    } else {
      tail = std::numeric_limits<double>::infinity();
    }
    const double roundoff = 4.0 * kEps * std::sqrt(static_cast<double>(i + 1)) *
                            std::max(std::abs(s), recent);
    double err = tail + roundoff;
    cdouble value = s;
    if (opts.acceleration != Acceleration::kNone) {
      const bool levin = opts.acceleration == Acceleration::kLevin;
      const std::size_t w = std::min<std::size_t>(re_sums.size(), levin ? 10 : 16);
      const std::size_t first = re_sums.size() - w;
      const auto acc = [&](const std::vector<double>& all) {
        std::span<const double> v(all.data() + first, w);
        return levin ? levin_u(v, first, first == 0 ? 0.0 : all[first - 1]) : aitken_iterated(v);
      };
      const Extrapolated er = acc(re_sums);
      const Extrapolated ei = acc(im_sums);
      const double acc_err = std::hypot(er.error, ei.error) + roundoff;
      if (acc_err < err) {
        err = acc_err;
        value = {er.value, ei.value};
      }
    }
    out.value = value;
    out.error_estimate = err;
    if (tol.accepts(err, std::abs(value))) {
      out.converged = true;
      return out;
    }
  }
  if (!std::isfinite(out.error_estimate)) out.error_estimate = std::numeric_limits<double>::max();
  return out;
}

}  // namespace rverify::quad
