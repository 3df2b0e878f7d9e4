#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "suppcurve/support_series.hpp"

namespace suppcurve {

/// Raised when an operation that needs a convex curve receives p with
/// min(p + p'') at or below the tolerance.
class ConvexityError : public std::runtime_error {
 public:
  ConvexityError(double min_radius, double argmin_phi);

  double min_radius() const noexcept { return min_radius_; }
  double argmin_phi() const noexcept { return argmin_phi_; }

 private:
  double min_radius_;
  double argmin_phi_;
};

enum class EqualityKind { Circle, AstroidParallel, Hypocycloid3Parallel, Generic };

std::string_view to_string(EqualityKind kind);

struct EqualityClass {
  EqualityKind kind = EqualityKind::Generic;
  /// Energy fraction outside the harmonic set of the class (for Generic: of
  /// the closest class).
  double residual = 0.0;
};

/// Names of every checked inequality; slack = larger side - smaller side.
namespace bound {
inline constexpr std::string_view kDeltaNonnegative = "delta_nonnegative";
inline constexpr std::string_view kPedalDominance = "pedal_dominance";
inline constexpr std::string_view kLowerGeneral = "lower_general";
inline constexpr std::string_view kLowerGroemer = "lower_groemer";
inline constexpr std::string_view kGeneralOverGroemer = "general_over_groemer";
inline constexpr std::string_view kUpperHurwitz = "upper_hurwitz";
inline constexpr std::string_view kPedalEvolute = "pedal_evolute";
inline constexpr std::string_view kLowerCw = "lower_cw";
inline constexpr std::string_view kLowerGroemerCw = "lower_groemer_cw";
inline constexpr std::string_view kCwOverGroemerCw = "cw_over_groemer_cw";
}  // namespace bound

struct Slack {
  std::string name;
  double value = 0.0;
};

/**
 * Every functional, bound and slack for one convex curve. A is the pedal
 * area about the Steiner point. The constant-width bounds are present only
 * when the curve has constant width.
 */
struct DeficitReport {
  double L = 0.0;
  double F = 0.0;
  double A = 0.0;
  double F_e = 0.0;
  double delta = 0.0;
  double delta2_sq = 0.0;

  double bound_lower_general = 0.0;  // 3 pi (A - F)
  double bound_lower_groemer = 0.0;  // 6 pi delta2^2
  double bound_upper_hurwitz = 0.0;  // pi |F_e|
  double bound_yyy = 0.0;            // |F_e| / 3, upper bound for A - F

  bool constant_width = false;
  std::optional<double> bound_lower_cw;          // 32 pi / 9 (A - F)
  std::optional<double> bound_lower_groemer_cw;  // 16 pi delta2^2

  /// Ordered; constant-width entries only when constant_width.
  std::vector<Slack> slacks;
  EqualityClass classification;

  std::optional<double> slack(std::string_view name) const;
};

/// Throws ConvexityError unless is_convex(p, convexity_tol). tol is the
/// constant-width and classification tolerance.
DeficitReport analyze(const FourierSupport& p, double tol = 1e-9, double convexity_tol = -1e-9);

EqualityClass classify_equality(const FourierSupport& p, double tol = 1e-9);

struct Violation {
  std::uint64_t seed = 0;
  std::string bound;
  double slack = 0.0;
};

struct Witness {
  std::uint64_t seed = 0;
  FourierSupport curve;
  /// (delta - 3 pi (A - F)) / delta
  double relative_slack = 0.0;
};

struct SweepSummary {
  std::size_t count = 0;
  std::vector<Violation> violations;  // sorted by seed
  std::map<std::string, double> min_slack_per_bound;
  /// Generic curve closest to equality in the general lower bound.
  std::optional<Witness> tightest_witness;
};

struct SweepOptions {
  std::size_t count = 1000;
  int degree = 8;
  std::uint64_t seed = 0;
  double min_radius = 0.05;
  bool constant_width_only = false;
  double tol = 1e-9;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Seed of curve i in a sweep started from seed.
std::uint64_t sweep_curve_seed(std::uint64_t seed, std::size_t index);

/// Curve i is random_convex(degree, sweep_curve_seed(seed, i), min_radius);
/// a slack below -tol max(1, |delta|) is a violation. Results do not depend on
/// the thread count.
SweepSummary sweep(const SweepOptions& options);

enum class CellStatus { Pass, Fail, SkippedNonConvex };

struct GridCell {
  double a0 = 0.0;
  double a = 0.0;
  double b = 0.0;
};

struct GridCellResult {
  GridCell cell;
  CellStatus status = CellStatus::Fail;
  double delta = 0.0;
  double bound = 0.0;
};

/// Checks equality in the general (n = 2) or constant-width (n = 3) lower
/// bound for p = a0 + a cos(n phi) + b sin(n phi) on each cell.
std::vector<GridCellResult> equality_grid_check(int n, const std::vector<GridCell>& grid, double tol);

}  // namespace suppcurve
