#pragma once

#include <cstddef>
#include <span>

#include "suppcurve/support_series.hpp"

namespace suppcurve {

/// How a functional is evaluated. closed_form uses the Parseval sums on the
/// coefficients; quadrature integrates the sampled integrand with the
/// periodic trapezoid rule and serves as the independent check.
enum class Mode { closed_form, quadrature };

/// Grid used by quadrature mode: max(4096, 4 N + 1).
std::size_t quadrature_grid(const FourierSupport& p);

/// (2 pi / M) sum of the samples. Exact for trigonometric polynomials of
/// degree < M.
double integrate_periodic(std::span<const double> samples);

/// L = integral of p.
double length(const FourierSupport& p, Mode mode = Mode::closed_form);

/// Algebraic area (1/2) integral (p^2 - p'^2). Negative for curves such as
/// the astroid traced by its generalized support.
double signed_area(const FourierSupport& p, Mode mode = Mode::closed_form);

/// Area of the pedal curve about the current origin, (1/2) integral p^2.
/// The pedal inequalities refer to the Steiner point, so recenter first.
double pedal_area(const FourierSupport& p, Mode mode = Mode::closed_form);

/// Algebraic area enclosed by the evolute, (1/2) integral (p'^2 - p''^2).
double evolute_area(const FourierSupport& p, Mode mode = Mode::closed_form);

/// L^2 - 4 pi F. The closed form is the spectral sum
/// 2 pi^2 sum_{n>=2} (n^2 - 1)(a_n^2 + b_n^2), which does not cancel for
/// near-circles; quadrature evaluates L^2 - 4 pi F literally.
double isoperimetric_deficit(const FourierSupport& p, Mode mode = Mode::closed_form);

/// Squared L2 distance between p and the support of its Steiner ball.
double delta2_squared(const FourierSupport& p, Mode mode = Mode::closed_form);

/// Algebraic area of the interior parallel curve at distance r,
/// F - L r + pi r^2.
double parallel_area(const FourierSupport& p, double r, Mode mode = Mode::closed_form);

/// -4 pi F_{L / 2 pi}.
double deficit_via_parallel(const FourierSupport& p, Mode mode = Mode::closed_form);

}  // namespace suppcurve
