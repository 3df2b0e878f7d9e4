#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace suppcurve {

/// A point of the Euclidean plane.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// One stored term a_n cos(n phi) + b_n sin(n phi).
struct Harmonic {
  int n = 1;
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/**
 * Truncated Fourier series of a (generalized) support function
 *
 *   p(phi) = a0 + sum_n a_n cos(n phi) + b_n sin(n phi).
 *
 * Storage is sparse and canonical: harmonics are sorted by n, indices are
 * distinct and >= 1, and no stored harmonic has a_n = b_n = 0. Values are
 * immutable once constructed.
 */
class FourierSupport {
 public:
  FourierSupport() = default;
  explicit FourierSupport(double a0, std::vector<Harmonic> harmonics = {});

  static FourierSupport constant(double r) { return FourierSupport(r); }

  double a0() const noexcept { return a0_; }
  std::span<const Harmonic> harmonics() const noexcept { return harmonics_; }
  /// Largest stored n, 0 for a pure constant.
  int degree() const noexcept { return harmonics_.empty() ? 0 : harmonics_.back().n; }
  /// (a_n, b_n), zeros when n is not stored. n = 0 returns (a0, 0).
  std::pair<double, double> coefficient(int n) const noexcept;

  friend bool operator==(const FourierSupport&, const FourierSupport&) = default;

 private:
  double a0_ = 0.0;
  std::vector<Harmonic> harmonics_;
};

struct CurvatureMinimum {
  double value = 0.0;
  double argmin_phi = 0.0;
};

/// Angle reduced to [0, 2pi).
double wrap_angle(double phi) noexcept;

/// order-th derivative of p at phi, order in {0, 1, 2, 3}.
double eval(const FourierSupport& p, double phi, int order = 0);

/// Signed p + p''; its absolute value is the radius of curvature.
double radius_of_curvature(const FourierSupport& p, double phi);

/// Global minimum of p + p'' over one period: dense grid of
/// max(4096, 64 N) points, then Newton on p' + p''' around the lowest cells.
CurvatureMinimum min_curvature_radius(const FourierSupport& p);

bool is_convex(const FourierSupport& p, double tol = 1e-9);

PlanePoint steiner_point(const FourierSupport& p);

/// Support of the same curve seen from the point (a, b): subtracts a from a_1
/// and b from b_1.
FourierSupport translate(const FourierSupport& p, double a, double b);
FourierSupport recenter_to_steiner(const FourierSupport& p);

/// p(phi) + p(phi + pi).
double width(const FourierSupport& p, double phi);
/// No stored even harmonic n >= 2 exceeds tol in either coefficient.
bool is_constant_width(const FourierSupport& p, double tol);

/**
 * Deterministic random convex support of the given degree: a0 = 1, no n = 1
 * term, harmonic n drawn uniformly from [-1, 1] n^-3, then the harmonic part
 * scaled down by the largest lambda <= 1 keeping min(p + p'') >= min_radius.
 * With odd_only set, even harmonics are never drawn (constant width).
 */
FourierSupport random_convex(int degree, std::uint64_t seed, double min_radius,
                             bool odd_only = false);

/// Discrete Fourier analysis of samples taken at phi_k = 2 pi k / M.
/// Requires M >= 2 * degree + 1.
FourierSupport from_samples(std::span<const double> values, int degree);

/// Values of the order-th derivative at the M uniform angles 2 pi k / M.
std::vector<double> sample_uniform(const FourierSupport& p, std::size_t M, int order = 0);

}  // namespace suppcurve
