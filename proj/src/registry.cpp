#include "rverify/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include "rverify/contfrac.hpp"
#include "rverify/identities/analytic.hpp"
#include "rverify/identities/classic.hpp"
#include "rverify/identities/elliptic.hpp"
#include "rverify/identities/lostnb.hpp"
#include "rverify/mellin.hpp"
#include "rverify/specfun.hpp"

namespace rverify {

namespace {

using quad::Tolerance;
constexpr double kPi = std::numbers::pi;

Tolerance abs_tol(double a) { return Tolerance(a, 0.0); }

double require(const quad::QuadResult& r, const char* who) {
  if (!r.converged) throw ConvergenceError(std::string(who) + ": quadrature not converged");
  return r.real();
}

// Residual-only identities report the residual against zero.
Sides residual_sides(double r) { return {r, 0.0}; }

Sides from_outcome(const CheckOutcome& o) {
  if (!o.message.empty()) throw ConvergenceError(o.message);
  return {o.lhs, o.rhs};
}

double letter_integral_1() {
  // 4 x e^{-x sqrt5}/cosh x with 1/cosh x = 2 e^{-x}/(1 + e^{-2x})
  auto f = [](double x) {
    return 8.0 * x * std::exp(-x * (std::sqrt(5.0) + 1.0)) / (1.0 + std::exp(-2.0 * x));
  };
  return require(quad::integrate_semi_infinite(f, 0.0, Tolerance(1e-14, 1e-12)), "letter-cf-1");
}

double letter_integral_2() {
  // 2 x^2 e^{-x sqrt3}/sinh x = 4 x e^{-x(sqrt3+1)} * x/(1 - e^{-2x})
  auto f = [](double x) {
    const double ratio = x == 0.0 ? 0.5 : x / -std::expm1(-2.0 * x);
    return 4.0 * x * std::exp(-x * (std::sqrt(3.0) + 1.0)) * ratio;
  };
  return require(quad::integrate_semi_infinite(f, 0.0, Tolerance(1e-15, 1e-13)), "letter-cf-2");
}

double cf_value(const cf::CFGenerator& gen, Tolerance tol, const char* who) {
  return require(cf::evaluate_cf(gen, tol), who);
}

std::vector<CheckSpec> build_reciprocal_log() {
  std::vector<CheckSpec> out;
  const double z2 = kPi * kPi / 6.0;

  CheckSpec sv{"q783-special-values", 2, "Question 783", Tier::kStrict, Tolerance(1e-12, 1e-9), {}};
  for (auto [n, v] : {std::pair{0.0, z2}, {1.0, z2 / 2.0}, {2.0, z2 * 0.4}}) {
    sv.grid.push_back({{{"n", n}}, [n, v] { return Sides{classic::q783_phi(n), v}; }});
  }
  out.push_back(std::move(sv));

  CheckSpec fn{"q783-functional", 2, "Question 783", Tier::kStrict, abs_tol(1e-9), {}};
  for (double n : {1.0 / 3.0, 0.5, 2.0, 3.0, 3.7}) {
    fn.grid.push_back({{{"n", n}}, [n, z2] {
                         return Sides{classic::q783_phi(n) + classic::q783_phi(1.0 / n), z2};
                       }});
  }
  out.push_back(std::move(fn));

  CheckSpec be{"berndt-evans-reduction", 2, "strictly increasing, differentiable function",
               Tier::kStrict, tier_tolerance(Tier::kStrict), {}};
  be.grid.push_back({{{"g", std::string("1+t")}, {"n", 1.0}}, [z2] {
                       return Sides{classic::berndt_evans_phi(classic::g_linear(), 1.0), z2 / 2.0};
                     }});
  be.grid.push_back({{{"g", std::string("1+t")}, {"n", 2.0}}, [z2] {
                       return Sides{classic::berndt_evans_phi(classic::g_linear(), 2.0), z2 * 0.4};
                     }});
  for (auto [name, g] : {std::pair{"1+t+t^2", classic::g_quadratic()}, {"cosh t", classic::g_cosh()}}) {
    for (double n : {2.0, 3.7}) {
      be.grid.push_back({{{"g", std::string(name)}, {"n", n}}, [g, n] {
                           return Sides{classic::berndt_evans_phi(g, n) + classic::berndt_evans_phi(g, 1.0 / n),
                                        2.0 * classic::berndt_evans_phi(g, 1.0)};
                         }});
    }
  }
  out.push_back(std::move(be));

  CheckSpec q295{"q295-reciprocity", 2, "Question 295", Tier::kStrict, abs_tol(1e-10), {}};
  const double sp = std::sqrt(kPi);
  for (auto [a, b] : {std::pair{1.0, kPi}, {2.0, kPi / 2.0}, {sp, sp}}) {
    q295.grid.push_back({{{"alpha", a}, {"beta", b}}, [a, b] {
                           return Sides{classic::q295_side(a), classic::q295_side(b)};
                         }});
  }
  out.push_back(std::move(q295));
  return out;
}

std::vector<CheckSpec> build_cosine_transform() {
  std::vector<CheckSpec> out;
  const double s2 = std::numbers::sqrt2;
  const double s3 = std::numbers::sqrt3;
  const double s5 = std::sqrt(5.0);

  CheckSpec sv{"ramphi-special-values", 3, "is a complicated function", Tier::kStrict,
               tier_tolerance(Tier::kStrict), {}};
  const std::vector<std::tuple<const char*, double, double>> values = {
      {"0", 0.0, 1.0 / 12.0},
      {"pi/2", kPi / 2.0, 1.0 / (4.0 * kPi)},
      {"pi", kPi, (2.0 - s2) / 8.0},
      {"2pi", 2.0 * kPi, 1.0 / 16.0},
      {"2pi/5", 2.0 * kPi / 5.0, (8.0 - 3.0 * s5) / 16.0},
      {"pi/5", kPi / 5.0, (6.0 + s5) / 4.0 - 5.0 * std::sqrt(10.0) / 8.0},
      {"2pi/3", 2.0 * kPi / 3.0, 1.0 / 3.0 - s3 * (3.0 / 16.0 - 1.0 / (8.0 * kPi))},
  };
  for (const auto& [label, n, v] : values) {
    sv.grid.push_back({{{"n", n}, {"at", std::string(label)}},
                       [n, v] { return Sides{classic::ram_phi(n), v}; }});
  }
  out.push_back(std::move(sv));

  CheckSpec sine{"ramphi-sine-functional", 3, "is a complicated function", Tier::kStrict,
                 abs_tol(1e-8), {}};
  for (double n : {1.3, kPi, 2.0 * kPi, 5.0}) {
    sine.grid.push_back({{{"n", n}}, [n] { return classic::ram_sine_sides(n); }});
  }
  out.push_back(std::move(sine));

  CheckSpec gauss{"ramphi-gauss-sum", 3, "variant of Gauss sums", Tier::kStrict, abs_tol(1e-8), {}};
  for (int a = 1; a <= 7; a += 2) {
    for (int b = 1; b <= 7; b += 2) {
      gauss.grid.push_back({{{"a", double(a)}, {"b", double(b)}}, [a, b] {
                              return Sides{classic::ram_phi_gauss(a, b), classic::ram_phi(kPi * a / b)};
                            }});
    }
  }
  out.push_back(std::move(gauss));

  // consecutive convergents of the first fraction bracket the limit but close slowly;
  // 1e-10 between them is reached well inside the term cap
  CheckSpec cf1{"letter-cf-1", 3, "representations for a pair of integrals", Tier::kStrict,
                abs_tol(1e-9), {}};
  cf1.grid.push_back({{}, [] {
                        return Sides{cf_value(cf::letter_cf1(), Tolerance(1e-10, 0.0), "letter-cf-1"),
                                     letter_integral_1()};
                      }});
  out.push_back(std::move(cf1));

  CheckSpec cf2{"letter-cf-2", 3, "representations for a pair of integrals", Tier::kStrict,
                abs_tol(1e-9), {}};
  cf2.grid.push_back({{}, [] {
                        return Sides{cf_value(cf::letter_cf2(), Tolerance(1e-13, 0.0), "letter-cf-2"),
                                     letter_integral_2()};
                      }});
  out.push_back(std::move(cf2));
  return out;
}

std::vector<CheckSpec> build_theta_gamma_xi() {
  std::vector<CheckSpec> out;
  const std::vector<std::pair<double, double>> tw = {{0.5, 1.0}, {1.0 / 3.0, 0.5}, {1.0, 2.0}};

  CheckSpec m1{"thetakernel-modular-1", 4, "modular relations", Tier::kStrict, abs_tol(1e-9), {}};
  CheckSpec m1p{"thetakernel-modular-1-phi", 4, "modular relations", Tier::kExperimental,
                abs_tol(1e-9), {}};
  CheckSpec m2{"thetakernel-modular-2", 4, "modular relations", Tier::kStrict, abs_tol(1e-9), {}};
  for (auto [t, w] : tw) {
    Params p{{"t", t}, {"w", w}};
    m1.grid.push_back({p, [t, w] { return analytic::modular1_sides(t, w); }});
    m1p.grid.push_back({p, [t, w] { return analytic::modular1_phi_sides(t, w); }});
    m2.grid.push_back({p, [t, w] { return analytic::modular2_sides(t, w); }});
  }
  out.push_back(std::move(m1));
  out.push_back(std::move(m1p));
  out.push_back(std::move(m2));

  CheckSpec mc{"mustafy-cos", 4, "used by A.~K.~Mustafy", Tier::kStrict, abs_tol(1e-8), {}};
  CheckSpec ms{"mustafy-sin", 4, "used by A.~K.~Mustafy", Tier::kStrict, abs_tol(1e-8), {}};
  for (double t : {0.05, 0.5, 1.0}) {
    mc.grid.push_back({{{"t", t}}, [t] { return analytic::mustafy_cos_sides(t); }});
    ms.grid.push_back({{{"t", t}}, [t] { return analytic::mustafy_sin_sides(t); }});
  }
  out.push_back(std::move(mc));
  out.push_back(std::move(ms));

  CheckSpec gq{"gamma-quad-product", 4, "If $\\alpha+\\beta+\\gamma+\\delta=4", Tier::kLoose,
               abs_tol(1e-4), {}};
  for (analytic::GammaQuadParams p : {analytic::GammaQuadParams{1, 1, 1, 1}, {1.5, 1.5, 0.5, 0.5},
                                      {1, 1, 1.5, 0.5}}) {
    gq.grid.push_back({{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"delta", p.delta}},
                       [p] {
                         return Sides{require(analytic::gamma_quad_integral(p), "gamma-quad-product"),
                                      analytic::gamma_quad_rhs(p)};
                       }});
  }
  out.push_back(std::move(gq));

  CheckSpec bp{"bessel-product", 4, "products of ordinary Bessel functions", Tier::kLoose,
               abs_tol(1e-5), {}};
  for (auto [a, b, x, y] : {std::tuple{1.0, 1.0, 1.0, 1.0}, {1.0, 1.0, 0.01, 0.01}, {2.0, 1.0, 1.0, 2.0}}) {
    bp.grid.push_back({{{"alpha", a}, {"beta", b}, {"x", x}, {"y", y}}, [a, b, x, y] {
                         return Sides{require(analytic::bessel_product_integral(a, b, x, y), "bessel-product"),
                                      analytic::bessel_product_rhs(a, b, x, y)};
                       }});
  }
  out.push_back(std::move(bp));

  CheckSpec e12{"riemann-eq12", 4, "through Fourier inversion", Tier::kLoose, abs_tol(1e-5), {}};
  for (double t : {0.0, 2.0}) {
    e12.grid.push_back({{{"t", t}}, [t] { return Sides{analytic::eq12_lhs(t), analytic::eq12_rhs(t)}; }});
  }
  out.push_back(std::move(e12));

  CheckSpec e13{"riemann-eq13", 4, "through Fourier inversion", Tier::kLoose, abs_tol(1e-6), {}};
  for (double n : {0.0, 0.5, 1.0}) {
    e13.grid.push_back({{{"n", n}}, [n] { return Sides{analytic::eq13_lhs(n), analytic::eq13_rhs(n)}; }});
  }
  out.push_back(std::move(e13));

  CheckSpec f0{"f-ns-s0", 4, "The integral has properties similar to those", Tier::kLoose,
               abs_tol(1e-5), {}};
  for (double n : {0.0, 0.5}) {
    f0.grid.push_back({{{"n", n}, {"s", 0.0}}, [n] {
                         return Sides{analytic::f_ns_t_side(n, 0.0), analytic::f_ns_x_side(n, 0.0)};
                       }});
  }
  out.push_back(std::move(f0));

  CheckSpec fs{"f-ns-strip", 4, "valid in some vertical strip", Tier::kExperimental, abs_tol(1e-5), {}};
  for (double s : {0.5, 0.75, 1.5}) {
    fs.grid.push_back({{{"n", 0.0}, {"s", s}}, [s] {
                         return Sides{analytic::f_ns_t_side(0.0, s), analytic::f_ns_x_side(0.0, s)};
                       }});
  }
  out.push_back(std::move(fs));
  return out;
}

std::vector<CheckSpec> build_mellin() {
  std::vector<CheckSpec> out;
  const mellin::RealFn exp_neg = [](double x) { return std::exp(-x); };
  const mellin::RealFn recip = [](double x) { return 1.0 / (1.0 + x); };
  const Tolerance strict = tier_tolerance(Tier::kStrict);

  CheckSpec fr{"frullani", 5, "continuous function on", Tier::kStrict, strict, {}};
  for (auto [name, f, f0, finf, a, b] :
       {std::tuple{"exp(-x)", exp_neg, 1.0, 0.0, 1.0, 2.0}, {"exp(-x)", exp_neg, 1.0, 0.0, 1.5, 1.5},
        {"1/(1+x)", recip, 1.0, 0.0, 2.0, 1.0}}) {
    fr.grid.push_back({{{"f", std::string(name)}, {"a", a}, {"b", b}}, [f, f0, finf, a, b] {
                         return Sides{require(mellin::frullani_integral(f, a, b), "frullani"),
                                      mellin::frullani(f0, finf, a, b)};
                       }});
  }
  out.push_back(std::move(fr));

  CheckSpec gf{"frullani-generalized", 5, "beautiful generalization of Frullani", Tier::kStandard,
               abs_tol(1e-5), {}};
  // f = e^{-x} has coefficients u = 1, g = 1/(1+x) has v(s) = Gamma(1+s):
  // d/ds log(v/u) at 0 is -gamma.
  const double dlog_recip = -sf::kEulerGamma;
  for (auto [name, g, a, b, dlog] : {std::tuple{"exp(-x)", exp_neg, 1.0, 3.0, 0.0},
                                     {"1/(1+x)", recip, 1.0, 1.0, dlog_recip},
                                     {"1/(1+x)", recip, 1.0, 2.0, dlog_recip}}) {
    gf.grid.push_back({{{"f", std::string("exp(-x)")}, {"g", std::string(name)}, {"a", a}, {"b", b},
                        {"correction", std::string("closed form")}},
                       [exp_neg, g, a, b, dlog] {
                         return from_outcome(mellin::generalized_frullani_check(
                             exp_neg, g, 1.0, 0.0, a, b, dlog, abs_tol(1e-5)));
                       }});
  }
  // second route: the correction term by numerical differentiation of log Gamma(1+s)
  for (double b : {1.0, 2.0}) {
    gf.grid.push_back({{{"f", std::string("exp(-x)")}, {"g", std::string("1/(1+x)")}, {"a", 1.0}, {"b", b},
                        {"correction", std::string("differentiated")}},
                       [exp_neg, recip, b] {
                         const double dlog = mellin::dlog_ratio_at_0(
                             [](double s) { return std::real(sf::ln_gamma(1.0 + s)); });
                         return from_outcome(mellin::generalized_frullani_check(
                             exp_neg, recip, 1.0, 0.0, 1.0, b, dlog, abs_tol(1e-5)));
                       }});
  }
  out.push_back(std::move(gf));

  CheckSpec mt{"master-theorem", 5, "Master Theorem", Tier::kStrict, strict, {}};
  for (double n : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    mt.grid.push_back({{{"F", std::string("exp(-x)")}, {"n", n}}, [exp_neg, n, strict] {
                         return from_outcome(
                             mellin::master_check(exp_neg, [](double) { return 1.0; }, n, strict));
                       }});
  }
  mt.grid.push_back({{{"F", std::string("1/(1+x)")}, {"n", 0.25}}, [recip, strict] {
                       return from_outcome(mellin::master_check(
                           recip, [](double k) { return std::real(sf::gamma(k + 1.0)); }, 0.25, strict));
                     }});
  out.push_back(std::move(mt));

  CheckSpec bm{"beta-from-master", 5, "representation of the beta function", Tier::kStrict,
               abs_tol(1e-10), {}};
  bm.grid.push_back({{{"m", 1.0 / 3.0}, {"n", 2.0 / 3.0}}, [] {
                       const double m = 1.0 / 3.0;
                       const double np = 2.0 / 3.0;
                       auto F = [=](double x) { return std::pow(1.0 + x, -(m + np)); };
                       auto phi = [=](double k) {
                         return std::real(sf::gamma(k + m + np)) / std::real(sf::gamma(m + np));
                       };
                       const CheckOutcome o = mellin::master_check(F, phi, m, abs_tol(1e-10));
                       if (!o.message.empty()) throw ConvergenceError(o.message);
                       return Sides{o.lhs, 2.0 * kPi / std::numbers::sqrt3};
                     }});
  out.push_back(std::move(bm));

  CheckSpec qb{"q-beta", 5, "Ramanujan's beautiful identity", Tier::kStrict, abs_tol(1e-8), {}};
  for (auto [s, a, q] : {std::tuple{0.5, 0.0, 0.2}, {1.0 / 3.0, 0.3, 0.1}, {0.5, 0.2, 0.2}}) {
    qb.grid.push_back({{{"s", s}, {"a", a}, {"q", q}}, [s, a, q] { return mellin::q_beta_sides(s, a, q); }});
  }
  out.push_back(std::move(qb));
  return out;
}

std::vector<CheckSpec> build_elliptic() {
  std::vector<CheckSpec> out;
  const Tolerance tol = abs_tol(1e-8);
  const std::vector<std::tuple<double, double, double>> add_grid = {
      {0.6, 0.6, 0.5}, {0.7, 0.9, 0.3}, {1.0, 1e-3, 0.5}};

  auto addition = [](double a, double b, double x, elliptic::RadicalVariant v) {
    const elliptic::AdditionResult r = elliptic::addition_check(a, b, x, v);
    const double m = x * x;
    return Sides{sf::elliptic_f(a, m) + sf::elliptic_f(b, m), sf::elliptic_f(r.gamma, m)};
  };
  CheckSpec add{"elliptic-addition", 6, "four different conditions", Tier::kStrict, tol, {}};
  CheckSpec add_x{"elliptic-addition-radical-x", 6, "four different conditions", Tier::kExperimental,
                  tol, {}};
  for (auto [a, b, x] : add_grid) {
    using elliptic::RadicalVariant;
    add.grid.push_back({{{"alpha", a}, {"beta", b}, {"x", x},
                         {"variant", std::string(to_string(RadicalVariant::kXSquared))}},
                        [=] { return addition(a, b, x, RadicalVariant::kXSquared); }});
    add_x.grid.push_back({{{"alpha", a}, {"beta", b}, {"x", x},
                           {"variant", std::string(to_string(RadicalVariant::kX))}},
                          [=] { return addition(a, b, x, RadicalVariant::kX); }});
  }
  out.push_back(std::move(add));
  out.push_back(std::move(add_x));

  CheckSpec ac{"entry-arccos", 6, "are verifications", Tier::kStrict, tol, {}};
  for (double x : {0.0, 0.6, -0.6}) {
    ac.grid.push_back({{{"x", x}}, [x] { return residual_sides(elliptic::entry_arccos_residual(x)); }});
  }
  out.push_back(std::move(ac));

  CheckSpec di{"entry-double-integral", 6, "more recondite than the previous theorem", Tier::kStrict,
               tol, {}};
  for (double x : {0.0, 0.5, 0.4, -0.4}) {
    di.grid.push_back({{{"x", x}}, [x] {
                         return Sides{elliptic::entry_double_integral_lhs(x),
                                      elliptic::entry_double_integral_rhs(x)};
                       }});
  }
  out.push_back(std::move(di));

  CheckSpec p172{"entry-page172", 6, "two remarkable elliptic integral transformations", Tier::kStrict,
                 tol, {}};
  for (auto [x, a] : {std::pair{0.2, 0.8}, {0.5, 1.2}, {0.3, 1e-3}}) {
    p172.grid.push_back({{{"x", x}, {"alpha", a}}, [x, a] {
                           const double b = elliptic::page172_beta(x, a);
                           const double c = (2.0 + x) / (1.0 + 2.0 * x);
                           return Sides{(1.0 + 2.0 * x) * sf::elliptic_f(a, x * x * x * c),
                                        sf::elliptic_f(b, x * c * c * c)};
                         }});
  }
  out.push_back(std::move(p172));

  CheckSpec qi{"quartic-inversion", 6, "Define $\\mu$ to be the constant", Tier::kStrict, tol, {}};
  for (double v : {1.0, 0.5, 1e-3}) {
    qi.grid.push_back({{{"v", v}}, [v] { return residual_sides(elliptic::quartic_inversion_residual(v)); }});
  }
  out.push_back(std::move(qi));

  CheckSpec li{"lemniscate-inversion", 6, "lemniscate integral $F(v)$ is defined", Tier::kStrict, tol, {}};
  for (double v : {1.0, 0.6, 0.05}) {
    li.grid.push_back({{{"v", v}}, [v] {
                         return Sides{elliptic::lemniscate_inversion_lhs(v), elliptic::lemniscate_inversion_rhs(v)};
                       }});
  }
  out.push_back(std::move(li));

  CheckSpec ld{"lemniscate-doubling", 6, "doubling the arc length", Tier::kStrict, tol, {}};
  for (double x : {1e-3, 1.0, 0.37}) {
    ld.grid.push_back({{{"x", x}}, [x] {
                         const double rhs = std::numbers::sqrt2 * elliptic::quartic_G(x);
                         return Sides{rhs + elliptic::lemniscate_doubling_residual(x), rhs};
                       }});
  }
  out.push_back(std::move(ld));
  return out;
}

std::vector<CheckSpec> build_lost_notebook() {
  std::vector<CheckSpec> out;

  CheckSpec lm{"lemma-dlambda", 7, "125\\lambda^3+22\\lambda^2+\\lambda", Tier::kStandard,
               Tolerance(0.0, 1e-6), {}};
  for (double q : {0.02, 0.05, 0.1, 0.2}) {
    lm.grid.push_back({{{"q", q}}, [q] { return Sides{1.0 + lostnb::lemma_dlambda_residual(q), 1.0}; }});
  }
  out.push_back(std::move(lm));

  const std::vector<double> e5_grid = {0.01, 0.1, 0.25, 0.3};
  CheckSpec e5{"entry5-elliptic", 7, "there exists a constant $C$", Tier::kStrict, abs_tol(1e-7), {}};
  CheckSpec e5h{"entry5-elliptic-half-diagnostic", 7, "there exists a constant $C$",
                Tier::kExperimental, abs_tol(1e-7), {}};
  for (double q : e5_grid) {
    e5.grid.push_back({{{"q", q}, {"form", std::string("arccos")}},
                       [q] { return Sides{lostnb::entry5_lhs(q), lostnb::entry5_rhs1(q)}; }});
    e5.grid.push_back({{{"q", q}, {"form", std::string("arctan")}},
                       [q] { return Sides{lostnb::entry5_lhs(q), lostnb::entry5_rhs2(q)}; }});
    e5h.grid.push_back({{{"q", q}, {"form", std::string("2 x arccos")}},
                        [q] { return Sides{lostnb::entry5_lhs(q), 2.0 * lostnb::entry5_rhs1(q)}; }});
  }
  out.push_back(std::move(e5));
  out.push_back(std::move(e5h));

  // constancy of C(q) against the value at q = 0.1
  CheckSpec cc{"entry5-constant-c", 7, "there exists a constant $C$", Tier::kLoose, Tolerance(0.0, 1e-4), {}};
  for (double q : {0.05, 0.15}) {
    cc.grid.push_back({{{"q", q}, {"reference_q", 0.1}}, [q] {
                         return Sides{lostnb::entry5_constant_C(q), lostnb::entry5_constant_C(0.1)};
                       }});
  }
  out.push_back(std::move(cc));

  CheckSpec e14{"entry14", 7, "modular equations of degree 14", Tier::kStrict, abs_tol(1e-8), {}};
  for (double q : {0.005, 0.02, 0.04}) {
    e14.grid.push_back({{{"q", q}}, [q] { return Sides{lostnb::entry14_lhs(q), lostnb::entry14_rhs(q)}; }});
  }
  out.push_back(std::move(e14));

  CheckSpec e35{"entry35", 7, "modular equations of degree 35", Tier::kStrict, abs_tol(1e-8), {}};
  for (double q : {0.005, 0.03, 0.08}) {
    e35.grid.push_back({{{"q", q}}, [q] { return Sides{lostnb::entry35_lhs(q), lostnb::entry35_rhs(q)}; }});
  }
  out.push_back(std::move(e35));
  return out;
}

std::vector<CheckSpec> build_catalog() {
  std::vector<CheckSpec> all;
  for (auto* part : {&build_reciprocal_log, &build_cosine_transform, &build_theta_gamma_xi,
                     &build_mellin, &build_elliptic, &build_lost_notebook}) {
    for (CheckSpec& s : part()) all.push_back(std::move(s));
  }
  return all;
}

}  // namespace

const char* to_string(Tier t) {
  switch (t) {
    case Tier::kStrict:
      return "strict";
    case Tier::kStandard:
      return "standard";
    case Tier::kLoose:
      return "loose";
    case Tier::kExperimental:
      return "experimental";
  }
  return "unknown";
}

std::optional<Tier> parse_tier(std::string_view name) {
  for (Tier t : {Tier::kStrict, Tier::kStandard, Tier::kLoose, Tier::kExperimental}) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

quad::Tolerance tier_tolerance(Tier t) {
  switch (t) {
    case Tier::kStrict:
      return {1e-12, 1e-8};
    case Tier::kStandard:
      return {1e-12, 1e-6};
    case Tier::kLoose:
    case Tier::kExperimental:
      return {1e-12, 1e-4};
  }
  return {1e-12, 1e-4};
}

const std::vector<CheckSpec>& catalog() {
  static const std::vector<CheckSpec> specs = build_catalog();
  return specs;
}

const CheckSpec* find_check(std::string_view id) {
  for (const CheckSpec& s : catalog()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const char* section_title(int section) {
  switch (section) {
    case 2:
      return "Reciprocal log integrals and Gaussian reciprocity";
    case 3:
      return "Cosine transform, Gauss sums, continued fractions";
    case 4:
      return "Theta kernels, gamma and Bessel integrals, Xi transforms";
    case 5:
      return "Mellin transforms and Frullani integrals";
    case 6:
      return "Elliptic integrals";
    case 7:
      return "Theta-product integrals";
    default:
      return "Other";
  }
}

bool glob_match(std::string_view pattern, std::string_view text) {
  return ::fnmatch(std::string(pattern).c_str(), std::string(text).c_str(), 0) == 0;
}

std::vector<const CheckSpec*> select_checks(const std::string& filter, const std::vector<Tier>& tiers) {
  std::vector<const CheckSpec*> out;
  for (const CheckSpec& s : catalog()) {
    const bool tier_ok = tiers.empty() || std::find(tiers.begin(), tiers.end(), s.tier) != tiers.end();
    if (tier_ok && glob_match(filter, s.id)) out.push_back(&s);
  }
  return out;
}

CheckOutcome evaluate_point(const CheckSpec& spec, std::size_t index, double tol_scale) {
  const GridPoint& point = spec.grid.at(index);
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  try {
    out = compare(point.evaluate(), spec.tolerance.scaled(tol_scale));
  } catch (const PoleError& e) {
    out = CheckOutcome{};
    out.lhs = out.rhs = std::nan("");
    out.abs_residual = out.rel_residual = std::nan("");
    out.status = Status::kSkipped;
    out.message = e.what();
  } catch (const std::exception& e) {
    out = CheckOutcome{};
    out.lhs = out.rhs = std::nan("");
    out.abs_residual = out.rel_residual = std::nan("");
    out.status = Status::kFail;
    out.message = e.what();
  }
  if (spec.tier == Tier::kExperimental && out.status != Status::kSkipped) {
    if (out.message.empty()) {
      out.message = out.status == Status::kPass ? "within loose bound" : "outside loose bound";
    }
    out.status = Status::kExperimental;
  }
  out.check_id = spec.id;
  out.params = point.params;
  out.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Summary summarize(const std::vector<CheckOutcome>& outcomes) {
  Summary s;
  for (const CheckOutcome& o : outcomes) {
    switch (o.status) {
      case Status::kPass:
        ++s.pass;
        break;
      case Status::kFail:
        ++s.fail;
        break;
      case Status::kSkipped:
        ++s.skipped;
        break;
      case Status::kExperimental:
        ++s.experimental;
        break;
    }
  }
  return s;
}

Report run(const std::vector<const CheckSpec*>& checks, double tol_scale, unsigned jobs) {
  if (!(tol_scale >= 1.0) || !std::isfinite(tol_scale)) {
    throw ConfigError("tol-scale must be a finite number >= 1");
  }
  if (jobs == 0) throw ConfigError("jobs must be >= 1");

  // Sorted by check id; the grid index keeps its catalog order.
  std::vector<const CheckSpec*> ordered = checks;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const CheckSpec* a, const CheckSpec* b) { return a->id < b->id; });
  std::vector<std::pair<const CheckSpec*, std::size_t>> tasks;
  for (const CheckSpec* s : ordered) {
    for (std::size_t i = 0; i < s->grid.size(); ++i) tasks.emplace_back(s, i);
  }

  Report report;
  report.tol_scale = tol_scale;
  report.outcomes.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      report.outcomes[k] = evaluate_point(*tasks[k].first, tasks[k].second, tol_scale);
    }
  };
  const unsigned n_threads = std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  report.summary = summarize(report.outcomes);
  return report;
}

Report run(const RunOptions& opts) {
  return run(select_checks(opts.filter, opts.tiers), opts.tol_scale, opts.jobs);
}

int exit_code(const Report& report) { return report.summary.fail > 0 ? 1 : 0; }

}  // namespace rverify
