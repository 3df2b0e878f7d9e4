#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "suppcurve/support_series.hpp"

namespace suppcurve {

/// Malformed curve text. line() is 1-based, 0 when the error is not tied to
/// a single line (e.g. a missing a0 directive).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/**
 * Curve text format, one directive per line:
 *
 *   # comment (also allowed after a directive)
 *   a0 <decimal>
 *   h <n> <a_n> <b_n>      n >= 1, at most one line per n
 *
 * Exactly one a0 line is required. Unknown directives are rejected.
 */
FourierSupport parse_curve(std::string_view text);

/// Coefficients written with 17 significant digits, so parse_curve gives
/// back the identical doubles.
std::string serialize_curve(const FourierSupport& p);

}  // namespace suppcurve
