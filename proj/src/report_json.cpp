#include "suppcurve/report_json.hpp"

#include <utility>
#include <vector>

#include <fmt/format.h>

namespace suppcurve {

namespace {

std::string number(double v) { return fmt::format("{:.17g}", v); }

std::vector<std::pair<std::string, double>> bounds_of(const DeficitReport& r) {
  std::vector<std::pair<std::string, double>> b = {
      {"lower_general", r.bound_lower_general},
      {"lower_groemer", r.bound_lower_groemer},
      {"upper_hurwitz", r.bound_upper_hurwitz},
      {"pedal_evolute", r.bound_yyy},
  };
  if (r.bound_lower_cw) b.emplace_back("lower_cw", *r.bound_lower_cw);
  if (r.bound_lower_groemer_cw) b.emplace_back("lower_groemer_cw", *r.bound_lower_groemer_cw);
  return b;
}

}  // namespace

std::string report_json(const DeficitReport& r) {
  std::string out = "{\n";
  const auto field = [&](std::string_view key, const std::string& value) {
    out += fmt::format("  \"{}\": {},\n", key, value);
  };
  field("L", number(r.L));
  field("F", number(r.F));
  field("A", number(r.A));
  field("F_e", number(r.F_e));
  field("delta", number(r.delta));
  field("delta2_sq", number(r.delta2_sq));

  const auto object = [](const auto& entries) {
    std::string s = "{";
    bool first = true;
    for (const auto& [name, value] : entries) {
      s += fmt::format("{}\n    \"{}\": {}", first ? "" : ",", name, number(value));
      first = false;
    }
    return s + "\n  }";
  };
  field("bounds", object(bounds_of(r)));
  std::vector<std::pair<std::string, double>> slacks;
  for (const Slack& s : r.slacks) slacks.emplace_back(s.name, s.value);
  field("slacks", object(slacks));

  field("constant_width", r.constant_width ? "true" : "false");
  field("classification", fmt::format("\"{}\"", to_string(r.classification.kind)));
  out += fmt::format("  \"residual\": {}\n}}\n", number(r.classification.residual));
  return out;
}

std::string report_text(const DeficitReport& r) {
  std::string out;
  out += fmt::format("L: {}\nF: {}\nA: {}\nF_e: {}\ndelta: {}\ndelta2_sq: {}\n", number(r.L), number(r.F),
                     number(r.A), number(r.F_e), number(r.delta), number(r.delta2_sq));
  for (const auto& [name, value] : bounds_of(r)) out += fmt::format("bound {}: {}\n", name, number(value));
  for (const Slack& s : r.slacks) out += fmt::format("slack {}: {}\n", s.name, number(s.value));
  out += fmt::format("constant_width: {}\nclassification: {}\nresidual: {}\n", r.constant_width,
                     to_string(r.classification.kind), number(r.classification.residual));
  return out;
}

}  // namespace suppcurve
