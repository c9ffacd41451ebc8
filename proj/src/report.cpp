#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rverify/registry.hpp"

namespace rverify {

namespace {

using Json = nlohmann::ordered_json;

Json side_json(double re, double im) {
  if (im != 0.0) return Json::array({re, im});
  return re;  // NaN serializes as null
}

void side_from_json(const Json& j, double& re, double& im) {
  if (j.is_array()) {
    re = j.at(0).get<double>();
    im = j.at(1).get<double>();
  } else {
    re = j.is_null() ? std::nan("") : j.get<double>();
    im = 0.0;
  }
}

double number_or_nan(const Json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

Status parse_status(const std::string& s) {
  for (Status st : {Status::kPass, Status::kFail, Status::kSkipped, Status::kExperimental}) {
    if (s == to_string(st)) return st;
  }
  throw ConfigError("unknown status in report: " + s);
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt_side(double re, double im) {
  if (im == 0.0) return fmt(re);
  return fmt(re) + (im < 0.0 ? " - " : " + ") + fmt(std::abs(im)) + "i";
}

std::string fmt_params(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ", ";
    out += k + "=";
    out += std::holds_alternative<double>(v) ? fmt(std::get<double>(v)) : std::get<std::string>(v);
  }
  return out.empty() ? "-" : out;
}

// Pipes would split the markdown cell.
std::string cell(std::string s) {
  for (char& c : s) {
    if (c == '|' || c == '\n') c = ' ';
  }
  return s;
}

}  // namespace

std::string to_json(const Report& report) {
  Json outcomes = Json::array();
  for (const CheckOutcome& o : report.outcomes) {
    Json params = Json::object();
    for (const auto& [k, v] : o.params) {
      if (std::holds_alternative<double>(v)) {
        params[k] = std::get<double>(v);
      } else {
        params[k] = std::get<std::string>(v);
      }
    }
    outcomes.push_back(Json{{"check_id", o.check_id},
                            {"params", params},
                            {"lhs", side_json(o.lhs, o.lhs_imag)},
                            {"rhs", side_json(o.rhs, o.rhs_imag)},
                            {"abs_residual", o.abs_residual},
                            {"rel_residual", o.rel_residual},
                            {"status", to_string(o.status)},
                            {"wall_time_ms", o.wall_time_ms}});
  }
  const Json doc{{"tool_version", report.tool_version},
                 {"tol_scale", report.tol_scale},
                 {"summary",
                  {{"pass", report.summary.pass},
                   {"fail", report.summary.fail},
                   {"skipped", report.summary.skipped},
                   {"experimental", report.summary.experimental}}},
                 {"outcomes", outcomes}};
  return doc.dump(2) + "\n";
}

Report from_json(const std::string& text) {
  const Json doc = Json::parse(text);
  Report r;
  r.tool_version = doc.at("tool_version").get<std::string>();
  r.tol_scale = doc.at("tol_scale").get<double>();
  const Json& s = doc.at("summary");
  r.summary = {s.at("pass").get<int>(), s.at("fail").get<int>(), s.at("skipped").get<int>(),
               s.at("experimental").get<int>()};
  for (const Json& j : doc.at("outcomes")) {
    CheckOutcome o;
    o.check_id = j.at("check_id").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
      if (v.is_string()) {
        o.params.emplace_back(k, v.get<std::string>());
      } else {
        o.params.emplace_back(k, v.get<double>());
      }
    }
    side_from_json(j.at("lhs"), o.lhs, o.lhs_imag);
    side_from_json(j.at("rhs"), o.rhs, o.rhs_imag);
    o.abs_residual = number_or_nan(j.at("abs_residual"));
    o.rel_residual = number_or_nan(j.at("rel_residual"));
    o.status = parse_status(j.at("status").get<std::string>());
    o.wall_time_ms = j.at("wall_time_ms").get<double>();
    r.outcomes.push_back(std::move(o));
  }
  return r;
}

std::string to_markdown(const Report& report) {
  std::ostringstream md;
  md << "# rverify report\n\n";
  md << "tool version " << report.tool_version << ", tolerance scale " << fmt(report.tol_scale) << "\n\n";
  md << "| pass | fail | skipped | experimental |\n|---:|---:|---:|---:|\n";
  md << "| " << report.summary.pass << " | " << report.summary.fail << " | " << report.summary.skipped
     << " | " << report.summary.experimental << " |\n";

  std::map<int, std::vector<const CheckOutcome*>> groups;
  for (const CheckOutcome& o : report.outcomes) {
    const CheckSpec* spec = find_check(o.check_id);
    groups[spec ? spec->section : 0].push_back(&o);
  }
  for (const auto& [section, rows] : groups) {
    md << "\n## " << section_title(section) << "\n\n";
    md << "| check | params | lhs | rhs | abs residual | rel residual | status | note |\n";
    md << "|---|---|---:|---:|---:|---:|---|---|\n";
    for (const CheckOutcome* o : rows) {
      md << "| " << o->check_id << " | " << cell(fmt_params(o->params)) << " | "
         << fmt_side(o->lhs, o->lhs_imag) << " | " << fmt_side(o->rhs, o->rhs_imag) << " | "
         << fmt(o->abs_residual) << " | " << fmt(o->rel_residual) << " | " << to_string(o->status)
         << " | " << cell(o->message) << " |\n";
    }
  }
  return md.str();
}

}  // namespace rverify
