#pragma once

#include "suppcurve/support_series.hpp"

namespace suppcurve {

/// Homothety-plus-rotation taking one curve onto another.
/// When degenerate is set, ratio and rotation carry no meaning.
struct SimilarityReport {
  double ratio = 0.0;
  double rotation = 0.0;  // [0, 2pi)
  double max_deviation = 0.0;
  bool degenerate = false;
};

/**
 * Normal form of a support a0 + a_n cos(n phi) + b_n sin(n phi), n in {2, 3}.
 *
 * n = 2:  p(phi) = a0 + amplitude sin(2u),  u = phi - phi0 + pi/4, phi0 in [0, pi)
 * n = 3:  p(phi) = a0 + amplitude cos(3u),  u = phi - phi0,        phi0 in [0, 2pi/3)
 *
 * In both cases tan(n phi0) = b_n / a_n, with the branch chosen so that the
 * amplitude is non-negative.
 */
struct CanonicalPhase {
  int n = 2;
  double a0 = 0.0;
  double amplitude = 0.0;
  double phi0 = 0.0;
};

/// Envelope point x = p cos - p' sin, y = p sin + p' cos.
PlanePoint boundary_point(const FourierSupport& p, double phi);

/// Foot of the perpendicular from the origin to the tangent line at phi.
PlanePoint pedal_point(const FourierSupport& p, double phi);

/// Generalized support -p'(phi + pi/2) of the evolute. Its boundary point at
/// phi is the centre of curvature of p at normal angle phi + pi/2.
FourierSupport evolute_support(const FourierSupport& p);

/// Interior parallel curve at distance r (a0 -> a0 - r).
FourierSupport parallel_support(const FourierSupport& p, double r);

/// Curve rotated by theta about the origin: q(phi) = p(phi - theta).
FourierSupport rotate(const FourierSupport& p, double theta);

/// Homothety about the origin.
FourierSupport scale(const FourierSupport& p, double lambda);

FourierSupport astroid_support(double a);
/// (2a sin^3 phi, 2a cos^3 phi)
PlanePoint astroid_param_point(double a, double phi);

FourierSupport hypocycloid3_support(double a);
/// (-2a cos t - a cos 2t, -2a sin t + a sin 2t); normal angle phi maps to
/// t = pi - 2 phi.
PlanePoint hypocycloid3_param_point(double a, double t);

/// Throws std::invalid_argument unless p has exactly one harmonic and its
/// index is 2 or 3.
CanonicalPhase canonical_phase(const FourierSupport& p);
/// a0 + amplitude sin(2 phi) or a0 + amplitude cos(3 phi).
FourierSupport canonical_form(const CanonicalPhase& c);
/// Inverse of canonical_phase.
FourierSupport reconstruct(const CanonicalPhase& c);

/**
 * Fits target ~ rotate(scale(source, ratio), rotation) and reports the sup
 * over 1024 angles of the boundary point mismatch. The ratio is seeded from
 * the coefficient norm ratio, the rotation from the phase of the dominant
 * source harmonic; every branch of that phase equation is tried.
 */
SimilarityReport similarity_between(const FourierSupport& target, const FourierSupport& source);

/// Number of cusps of the curve traced by a generalized support: sign
/// changes of p + p'' on a 4096-point grid, halved when p(phi + pi) = -p(phi)
/// (the curve is then traced twice).
int cusp_count(const FourierSupport& p);

}  // namespace suppcurve
