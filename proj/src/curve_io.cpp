#include "suppcurve/curve_io.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace suppcurve {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_real(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, fmt::format("expected a number, got '{}'", token));
  }
  if (!std::isfinite(value)) throw ParseError(line, fmt::format("non-finite number '{}'", token));
  return value;
}

int parse_index(std::string_view token, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, fmt::format("expected a harmonic index, got '{}'", token));
  }
  if (value < 1) throw ParseError(line, fmt::format("harmonic index must be >= 1, got {}", value));
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : fmt::format("line {}: {}", line, what)), line_(line) {}

FourierSupport parse_curve(std::string_view text) {
  std::optional<double> a0;
  std::vector<Harmonic> harmonics;
  std::set<int> seen;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const std::vector<std::string_view> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "a0") {
      if (tok.size() != 2) throw ParseError(line_no, "a0 takes exactly one value");
      if (a0) throw ParseError(line_no, "duplicate a0 directive");
      a0 = parse_real(tok[1], line_no);
    } else if (tok[0] == "h") {
      if (tok.size() != 4) throw ParseError(line_no, "h takes exactly three values: n a_n b_n");
      const int n = parse_index(tok[1], line_no);
      if (!seen.insert(n).second) throw ParseError(line_no, fmt::format("duplicate harmonic n = {}", n));
      harmonics.push_back({n, parse_real(tok[2], line_no), parse_real(tok[3], line_no)});
    } else {
      throw ParseError(line_no, fmt::format("unknown directive '{}'", tok[0]));
    }
  }
  if (!a0) throw ParseError(0, "missing a0 directive");
  return FourierSupport(*a0, std::move(harmonics));
}

std::string serialize_curve(const FourierSupport& p) {
  std::string out = fmt::format("# support function: a0 + sum a_n cos(n phi) + b_n sin(n phi)\na0 {:.17g}\n", p.a0());
  for (const Harmonic& h : p.harmonics()) out += fmt::format("h {} {:.17g} {:.17g}\n", h.n, h.a, h.b);
  return out;
}

}  // namespace suppcurve
