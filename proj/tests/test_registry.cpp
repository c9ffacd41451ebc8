#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "rverify/registry.hpp"

using namespace rverify;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Report strip_times(Report r) {
  for (auto& o : r.outcomes) o.wall_time_ms = 0.0;
  return r;
}

const char* const kRequiredIds[] = {
    "q783-special-values", "q783-functional", "berndt-evans-reduction", "q295-reciprocity",
    "ramphi-special-values", "ramphi-sine-functional", "ramphi-gauss-sum", "letter-cf-1", "letter-cf-2",
    "thetakernel-modular-1", "thetakernel-modular-2", "mustafy-cos", "mustafy-sin", "gamma-quad-product",
    "bessel-product", "riemann-eq12", "riemann-eq13", "f-ns-s0", "master-theorem", "beta-from-master",
    "q-beta", "frullani", "frullani-generalized", "elliptic-addition", "entry-arccos",
    "entry-double-integral", "entry-page172", "quartic-inversion", "lemniscate-inversion",
    "lemniscate-doubling", "lemma-dlambda", "entry5-elliptic", "entry5-constant-c", "entry14", "entry35"};

Report fixed_report() {
  Report r;
  r.tol_scale = 2.0;
  CheckOutcome a;
  a.check_id = "alpha";
  a.params = {{"n", 0.5}, {"form", std::string("arctan")}};
  a.lhs = 1.25;
  a.rhs = 1.0;
  a.abs_residual = 0.25;
  a.rel_residual = 0.2;
  a.status = Status::kFail;
  a.wall_time_ms = 3.5;
  a.message = "example note";
  CheckOutcome b;
  b.check_id = "beta";
  b.params = {{"t", 1.0}};
  b.lhs = 0.5;
  b.rhs = 0.5;
  b.lhs_imag = -0.125;
  b.rhs_imag = -0.125;
  b.status = Status::kPass;
  CheckOutcome c;
  c.check_id = "gamma";
  c.lhs = std::numeric_limits<double>::quiet_NaN();
  c.rhs = 2.0;
  c.abs_residual = std::numeric_limits<double>::quiet_NaN();
  c.rel_residual = std::numeric_limits<double>::quiet_NaN();
  c.status = Status::kSkipped;
  r.outcomes = {a, b, c};
  r.summary = summarize(r.outcomes);
  return r;
}

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

void check_same(const Report& a, const Report& b) {
  CHECK(a.tool_version == b.tool_version);
  CHECK(a.tol_scale == b.tol_scale);
  CHECK(a.summary.pass == b.summary.pass);
  CHECK(a.summary.fail == b.summary.fail);
  CHECK(a.summary.skipped == b.summary.skipped);
  CHECK(a.summary.experimental == b.summary.experimental);
  REQUIRE(a.outcomes.size() == b.outcomes.size());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    const auto& x = a.outcomes[i];
    const auto& y = b.outcomes[i];
    CHECK(x.check_id == y.check_id);
    CHECK(x.params == y.params);
    CHECK(same_number(x.lhs, y.lhs));
    CHECK(same_number(x.rhs, y.rhs));
    CHECK(same_number(x.lhs_imag, y.lhs_imag));
    CHECK(same_number(x.rhs_imag, y.rhs_imag));
    CHECK(same_number(x.abs_residual, y.abs_residual));
    CHECK(same_number(x.rel_residual, y.rel_residual));
    CHECK(x.status == y.status);
    CHECK(x.wall_time_ms == y.wall_time_ms);
  }
}

}  // namespace

TEST_CASE("catalog holds every required family once") {
  const auto& cat = catalog();
  CHECK(cat.size() >= 35);
  std::set<std::string> ids;
  for (const auto& s : cat) {
    CHECK_MESSAGE(ids.insert(s.id).second, "duplicate id " << s.id);
    CHECK_FALSE(s.grid.empty());
    CHECK(section_title(s.section) != nullptr);
  }
  for (const char* id : kRequiredIds) CHECK_MESSAGE(find_check(id) != nullptr, "missing " << id);
  CHECK(find_check("no-such-check") == nullptr);
}

TEST_CASE("every anchor quotes the source text") {
  const std::string text = slurp(std::string(RVERIFY_SOURCE_DIR) + "/paper.md");
  REQUIRE_FALSE(text.empty());
  for (const auto& s : catalog()) {
    CHECK_FALSE(s.anchor.empty());
    CHECK_MESSAGE(text.find(s.anchor) != std::string::npos, s.id << ": anchor '" << s.anchor << "' not found");
  }
}

TEST_CASE("glob and tier selection") {
  CHECK(glob_match("q783-*", "q783-functional"));
  CHECK_FALSE(glob_match("q783-*", "q295-reciprocity"));
  CHECK(glob_match("entry?4", "entry14"));
  CHECK(glob_match("*", "anything"));
  const auto q783 = select_checks("q783-*", {});
  REQUIRE(q783.size() == 2);
  CHECK(q783[0]->id == "q783-special-values");
  CHECK(q783[1]->id == "q783-functional");
  for (const CheckSpec* s : select_checks("*", {Tier::kLoose})) CHECK(s->tier == Tier::kLoose);
  CHECK(select_checks("*", {}).size() == catalog().size());
  CHECK(parse_tier("strict") == Tier::kStrict);
  CHECK_FALSE(parse_tier("bogus").has_value());
}

TEST_CASE("tier tolerances") {
  CHECK(tier_tolerance(Tier::kStrict).rel_tol == 1e-8);
  CHECK(tier_tolerance(Tier::kStandard).rel_tol == 1e-6);
  CHECK(tier_tolerance(Tier::kLoose).rel_tol == 1e-4);
  CHECK(tier_tolerance(Tier::kStrict).abs_tol == 1e-12);
}

TEST_CASE("question 783 families all pass") {
  RunOptions o;
  o.filter = "q783-*";
  const Report r = run(o);
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.pass == int(r.outcomes.size()));
  std::set<std::string> fams;
  for (const auto& oc : r.outcomes) fams.insert(oc.check_id);
  CHECK(fams.size() == 2);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("experimental outcomes never set the exit code") {
  RunOptions o;
  o.filter = "f-ns-*";
  o.tiers = {Tier::kExperimental};
  const Report r = run(o);
  CHECK_FALSE(r.outcomes.empty());
  for (const auto& oc : r.outcomes) CHECK(oc.status == Status::kExperimental);
  CHECK(r.summary.experimental == int(r.outcomes.size()));
  CHECK(exit_code(r) == 0);
}

TEST_CASE("status follows the scaled tolerance") {
  for (const auto& oc : run(RunOptions{}).outcomes) {
    const CheckSpec* s = find_check(oc.check_id);
    REQUIRE(s != nullptr);
    if (oc.status == Status::kPass) {
      CHECK(oc.abs_residual <= s->tolerance.bound(std::max(std::abs(oc.lhs), std::abs(oc.rhs))));
    }
    if (oc.status == Status::kFail && oc.message.empty()) {
      CHECK(oc.abs_residual > s->tolerance.bound(std::max(std::abs(oc.lhs), std::abs(oc.rhs))));
    }
  }
}

TEST_CASE("bad runner arguments are configuration errors") {
  RunOptions o;
  o.tol_scale = 0.5;
  CHECK_THROWS_AS(run(o), ConfigError);
  o.tol_scale = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(run(o), ConfigError);
  o.tol_scale = 1.0;
  o.jobs = 0;
  CHECK_THROWS_AS(run(o), ConfigError);
}

TEST_CASE("reports are deterministic apart from wall time") {
  const Report a = strip_times(run(RunOptions{}));
  const Report b = strip_times(run(RunOptions{}));
  CHECK(to_json(a) == to_json(b));
  CHECK(to_markdown(a) == to_markdown(b));
}

TEST_CASE("serial and parallel runs agree") {
  RunOptions par;
  par.jobs = 4;
  const Report serial = strip_times(run(RunOptions{}));
  const Report parallel = strip_times(run(par));
  check_same(serial, parallel);
  CHECK(to_json(serial) == to_json(parallel));
}

TEST_CASE("JSON round trip: full report") {
  const Report r = run(RunOptions{});
  check_same(from_json(to_json(r)), r);
  CHECK(to_json(from_json(to_json(r))) == to_json(r));
}

TEST_CASE("JSON round trip: empty report") {
  const Report r;
  const Report back = from_json(to_json(r));
  check_same(back, r);
  CHECK(back.outcomes.empty());
}

TEST_CASE("JSON golden file for a fixed report") {
  const Report r = fixed_report();
  const std::string golden = slurp(std::string(RVERIFY_SOURCE_DIR) + "/tests/golden/fixed_report.json");
  REQUIRE_FALSE(golden.empty());
  CHECK(to_json(r) == golden);
  check_same(from_json(golden), r);
}

TEST_CASE("JSON carries exactly the report fields") {
  const std::string j = to_json(fixed_report());
  for (const char* key : {"\"tool_version\"", "\"tol_scale\"", "\"summary\"", "\"pass\"", "\"fail\"", "\"skipped\"",
                          "\"experimental\"", "\"outcomes\"", "\"check_id\"", "\"params\"", "\"lhs\"", "\"rhs\"",
                          "\"abs_residual\"", "\"rel_residual\"", "\"status\"", "\"wall_time_ms\""}) {
    CHECK_MESSAGE(j.find(key) != std::string::npos, key);
  }
}

TEST_CASE("markdown groups by topic") {
  const std::string md = to_markdown(run(RunOptions{}));
  for (int s = 2; s <= 7; ++s) CHECK(md.find(section_title(s)) != std::string::npos);
  CHECK(md.find("wall") == std::string::npos);
}

TEST_CASE("strict tier has no failures" * doctest::test_suite("source-conflict")) {
  RunOptions o;
  o.tiers = {Tier::kStrict};
  const Report r = run(o);
  CHECK(r.summary.fail == 0);
  CHECK(exit_code(r) == 0);
}
