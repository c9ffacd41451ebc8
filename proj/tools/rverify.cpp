#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rverify/identities/classic.hpp"
#include "rverify/identities/elliptic.hpp"
#include "rverify/identities/lostnb.hpp"
#include "rverify/qseries.hpp"
#include "rverify/registry.hpp"
#include "rverify/specfun.hpp"

namespace {

using namespace rverify;

constexpr int kConfigExit = 2;

std::vector<Tier> parse_tiers(const std::string& text) {
  std::vector<Tier> out;
  if (text.empty() || text == "all") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = parse_tier(item);
    if (!t) throw ConfigError("unknown tier '" + item + "' (strict, standard, loose, experimental, all)");
    out.push_back(*t);
  }
  return out;
}

struct EvalFn {
  std::size_t arity;
  std::function<std::string(const std::vector<double>&)> call;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string cnum(std::complex<double> z) {
  if (z.imag() == 0.0) return num(z.real());
  return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i";
}

const std::map<std::string, EvalFn>& eval_table() {
  using V = std::vector<double>;
  static const std::map<std::string, EvalFn> table = {
      {"q783_phi", {1, [](const V& a) { return num(classic::q783_phi(a[0])); }}},
      {"q295_side", {1, [](const V& a) { return num(classic::q295_side(a[0])); }}},
      {"ram_phi", {1, [](const V& a) { return num(classic::ram_phi(a[0])); }}},
      {"ram_sine", {1, [](const V& a) { return num(classic::ram_sine(a[0])); }}},
      {"ram_phi_gauss",
       {2, [](const V& a) { return num(classic::ram_phi_gauss(int(a[0]), int(a[1]))); }}},
      {"gamma", {1, [](const V& a) { return num(std::real(sf::gamma(a[0]))); }}},
      {"ln_gamma", {1, [](const V& a) { return cnum(sf::ln_gamma(a[0])); }}},
      {"recip_gamma", {1, [](const V& a) { return num(sf::recip_gamma(a[0])); }}},
      {"digamma", {1, [](const V& a) { return num(sf::digamma(a[0])); }}},
      {"zeta", {1, [](const V& a) { return cnum(sf::zeta(a[0])); }}},
      {"xi", {1, [](const V& a) { return cnum(sf::xi(a[0])); }}},
      {"Xi", {1, [](const V& a) { return cnum(sf::xi_big(a[0])); }}},
      {"bessel_j", {2, [](const V& a) { return num(sf::bessel_j(a[0], a[1])); }}},
      {"li2", {1, [](const V& a) { return num(sf::li2(a[0])); }}},
      {"agm", {2, [](const V& a) { return num(sf::agm(a[0], a[1])); }}},
      {"elliptic_k", {1, [](const V& a) { return num(sf::elliptic_k(a[0])); }}},
      {"elliptic_f", {2, [](const V& a) { return num(sf::elliptic_f(a[0], a[1])); }}},
      {"qpochhammer_inf", {2, [](const V& a) { return num(qs::qpochhammer_inf(a[0], a[1])); }}},
      {"euler_f", {1, [](const V& a) { return num(qs::euler_f_neg(a[0])); }}},
      {"rr_cf", {1, [](const V& a) { return num(qs::rr_cf_product(a[0])); }}},
      {"lambda5", {1, [](const V& a) { return num(qs::lambda5(a[0])); }}},
      {"quartic_G", {1, [](const V& a) { return num(elliptic::quartic_G(a[0])); }}},
      {"lemniscate_F", {1, [](const V& a) { return num(elliptic::lemniscate_F(a[0])); }}},
      {"entry5_constant_C", {1, [](const V& a) { return num(lostnb::entry5_constant_C(a[0])); }}},
  };
  return table;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw ConfigError("write failed: " + path);
}

int cmd_list(const std::string& tier_text, int section) {
  const std::vector<Tier> tiers = parse_tiers(tier_text);
  for (const CheckSpec* s : select_checks("*", tiers)) {
    if (section != 0 && s->section != section) continue;
    std::printf("%-34s %-12s %d  %2zu  %s\n", s->id.c_str(), to_string(s->tier), s->section,
                s->grid.size(), s->anchor.c_str());
  }
  return 0;
}

int cmd_run(const RunOptions& opts, const std::string& json_path, const std::string& md_path) {
  const Report report = run(opts);
  for (const CheckOutcome& o : report.outcomes) {
    if (o.status == Status::kFail) {
      std::printf("FAIL %s abs_residual=%.3g %s\n", o.check_id.c_str(), o.abs_residual, o.message.c_str());
    }
  }
  std::printf("pass %d  fail %d  skipped %d  experimental %d\n", report.summary.pass,
              report.summary.fail, report.summary.skipped, report.summary.experimental);
  if (!json_path.empty()) write_file(json_path, to_json(report));
  if (!md_path.empty()) write_file(md_path, to_markdown(report));
  return exit_code(report);
}

int cmd_eval(const std::string& name, const std::vector<std::string>& args) {
  const auto& table = eval_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    std::string names;
    for (const auto& [k, v] : table) names += " " + k;
    throw ConfigError("unknown function '" + name + "'; available:" + names);
  }
  if (args.size() != it->second.arity) {
    throw ConfigError(name + " takes " + std::to_string(it->second.arity) + " argument(s)");
  }
  std::vector<double> values;
  for (const std::string& a : args) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(a, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != a.size()) throw ConfigError("not a number: " + a);
    values.push_back(v);
  }
  try {
    std::printf("%s\n", it->second.call(values).c_str());
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of a catalog of integral identities"};
  app.require_subcommand(1);

  std::string list_tier;
  int list_section = 0;
  CLI::App* list = app.add_subcommand("list", "List catalog checks");
  list->add_option("--tier", list_tier, "Tier or comma list (strict, standard, loose, experimental)");
  list->add_option("--section", list_section, "Topic group number");

  RunOptions opts;
  std::string run_tier;
  std::string json_path;
  std::string md_path;
  CLI::App* runc = app.add_subcommand("run", "Run checks and report");
  runc->add_option("--filter", opts.filter, "Glob on check id");
  runc->add_option("--tier", run_tier, "Tier or comma list");
  runc->add_option("--tol-scale", opts.tol_scale, "Tolerance multiplier, >= 1");
  runc->add_option("--jobs", opts.jobs, "Worker threads");
  runc->add_option("--json", json_path, "Write JSON report");
  runc->add_option("--md", md_path, "Write Markdown report");

  std::string fn;
  std::vector<std::string> fn_args;
  CLI::App* evalc = app.add_subcommand("eval", "Evaluate a library function");
  evalc->add_option("fn", fn, "Function name")->required();
  evalc->add_option("args", fn_args, "Real arguments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigExit;
  }

  try {
    if (*list) return cmd_list(list_tier, list_section);
    if (*runc) {
      opts.tiers = parse_tiers(run_tier);
      return cmd_run(opts, json_path, md_path);
    }
    if (*evalc) return cmd_eval(fn, fn_args);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigExit;
  }
  return kConfigExit;
}
