#pragma once

#include <string>

#include "suppcurve/inequality_suite.hpp"

namespace suppcurve {

/// Fixed key order, numbers at 17 significant digits:
/// L, F, A, F_e, delta, delta2_sq, bounds{...}, slacks{...},
/// constant_width, classification, residual.
std::string report_json(const DeficitReport& report);

/// Plain "key: value" lines, same content as report_json.
std::string report_text(const DeficitReport& report);

}  // namespace suppcurve
