#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suppcurve {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kNotConvex = 3;
inline constexpr int kViolation = 4;
inline constexpr int kInvalidArguments = 5;
}  // namespace exit_code

/// Command-line entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suppcurve
