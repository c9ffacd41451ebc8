#pragma once

// Identity catalog and the check runner. Every catalog entry pairs a list of
// parameter points with an evaluator producing both sides of one identity.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rverify/errors.hpp"
#include "rverify/outcome.hpp"
#include "rverify/quadrature.hpp"

namespace rverify {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Tier { kStrict, kStandard, kLoose, kExperimental };

const char* to_string(Tier t);
std::optional<Tier> parse_tier(std::string_view name);

// strict 1e-8, standard 1e-6, loose 1e-4 relative, 1e-12 absolute floor.
// Experimental reuses the loose bound for the report, never for the exit code.
quad::Tolerance tier_tolerance(Tier t);

// Bad CLI or runner arguments; maps to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct GridPoint {
  Params params;
  std::function<Sides()> evaluate;
};

struct CheckSpec {
  std::string id;
  int section = 0;     // topical group number used by `list --section` and the markdown report
  std::string anchor;  // verbatim quote locating the identity in the source text
  Tier tier = Tier::kStrict;
  quad::Tolerance tolerance;
  std::vector<GridPoint> grid;
};

// Stable order; ids unique.
const std::vector<CheckSpec>& catalog();
const CheckSpec* find_check(std::string_view id);
const char* section_title(int section);

struct RunOptions {
  std::string filter = "*";
  std::vector<Tier> tiers;  // empty selects every tier
  double tol_scale = 1.0;   // >= 1
  unsigned jobs = 1;        // >= 1
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  int experimental = 0;
};

struct Report {
  std::string tool_version = kToolVersion;
  double tol_scale = 1.0;
  Summary summary;
  std::vector<CheckOutcome> outcomes;  // ordered by (check_id, grid index)
};

bool glob_match(std::string_view pattern, std::string_view text);

// Checks whose id matches `filter` and whose tier is in `tiers`, in catalog order.
std::vector<const CheckSpec*> select_checks(const std::string& filter,
                                            const std::vector<Tier>& tiers);

// One grid point. Exceptions become a failing outcome carrying the message,
// except PoleError which marks the point skipped. Experimental checks always
// report status experimental.
CheckOutcome evaluate_point(const CheckSpec& spec, std::size_t index, double tol_scale);

// Throws ConfigError for tol_scale < 1 or jobs == 0.
Report run(const RunOptions& opts);
Report run(const std::vector<const CheckSpec*>& checks, double tol_scale, unsigned jobs);

Summary summarize(const std::vector<CheckOutcome>& outcomes);
// 0 when nothing failed, 1 otherwise. Experimental outcomes never count.
int exit_code(const Report& report);

// JSON with fields tool_version, tol_scale, summary, outcomes.
std::string to_json(const Report& report);
Report from_json(const std::string& text);
// Tables grouped by section; failure messages appear here only.
std::string to_markdown(const Report& report);

}  // namespace rverify
