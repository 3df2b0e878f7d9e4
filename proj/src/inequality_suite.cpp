#include "suppcurve/inequality_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <fmt/format.h>

#include "suppcurve/functionals.hpp"

namespace suppcurve {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

// Weighted energy sums over n >= 2 of the Steiner-recentered support.
struct SpectralSums {
  double plain = 0.0;      // sum e_n
  double n2 = 0.0;         // sum n^2 e_n
  double n2m1 = 0.0;       // sum (n^2 - 1) e_n
  double n2_n2m1 = 0.0;    // sum n^2 (n^2 - 1) e_n
};

SpectralSums spectral_sums(const FourierSupport& p) {
  SpectralSums s;
  for (const Harmonic& h : p.harmonics()) {
    if (h.n < 2) continue;
    const double e = h.a * h.a + h.b * h.b;
    const double n2 = static_cast<double>(h.n) * h.n;
    s.plain += e;
    s.n2 += n2 * e;
    s.n2m1 += (n2 - 1.0) * e;
    s.n2_n2m1 += n2 * (n2 - 1.0) * e;
  }
  return s;
}

}  // namespace

ConvexityError::ConvexityError(double min_radius, double argmin_phi)
    : std::runtime_error(fmt::format("curve is not convex: min(p + p'') = {:.17g} at phi = {:.17g}",
                                     min_radius, argmin_phi)),
      min_radius_(min_radius),
      argmin_phi_(argmin_phi) {}

std::string_view to_string(EqualityKind kind) {
  switch (kind) {
    case EqualityKind::Circle:
      return "circle";
    case EqualityKind::AstroidParallel:
      return "astroid_parallel";
    case EqualityKind::Hypocycloid3Parallel:
      return "hypocycloid3_parallel";
    case EqualityKind::Generic:
      return "generic";
  }
  return "generic";
}

std::optional<double> DeficitReport::slack(std::string_view name) const {
  for (const Slack& s : slacks) {
    if (s.name == name) return s.value;
  }
  return std::nullopt;
}

EqualityClass classify_equality(const FourierSupport& p, double tol) {
  const FourierSupport q = recenter_to_steiner(p);
  double total = 2.0 * q.a0() * q.a0();
  double e2 = 0.0;
  double e3 = 0.0;
  double harmonic = 0.0;
  for (const Harmonic& h : q.harmonics()) {
    const double e = h.a * h.a + h.b * h.b;
    total += e;
    harmonic += e;
    if (h.n == 2) e2 = e;
    if (h.n == 3) e3 = e;
  }
  if (total == 0.0) return {EqualityKind::Circle, 0.0};

  const double outside_circle = harmonic / total;
  const double outside_astroid = (harmonic - e2) / total;
  const double outside_hypocycloid = (harmonic - e3) / total;
  if (outside_circle <= tol) return {EqualityKind::Circle, outside_circle};
  if (outside_astroid <= tol && e2 / total > tol) return {EqualityKind::AstroidParallel, outside_astroid};
  if (outside_hypocycloid <= tol && e3 / total > tol) {
    return {EqualityKind::Hypocycloid3Parallel, outside_hypocycloid};
  }
  return {EqualityKind::Generic, std::min({outside_circle, outside_astroid, outside_hypocycloid})};
}

DeficitReport analyze(const FourierSupport& p, double tol, double convexity_tol) {
  const CurvatureMinimum m = min_curvature_radius(p);
  if (!(m.value > convexity_tol)) throw ConvexityError(m.value, m.argmin_phi);

  const FourierSupport q = recenter_to_steiner(p);
  const SpectralSums s = spectral_sums(q);

  DeficitReport r;
  r.L = length(q);
  r.F = signed_area(q);
  r.A = pedal_area(q);
  r.F_e = evolute_area(q);
  r.delta = isoperimetric_deficit(q);
  r.delta2_sq = delta2_squared(q);

  // Every bound is pi^2 times a weighted energy sum, so equality cases
  // reproduce delta bit for bit.
  r.bound_lower_general = kPi2 * (1.5 * s.n2);
  r.bound_lower_groemer = kPi2 * (6.0 * s.plain);
  r.bound_upper_hurwitz = kPi2 * (0.5 * s.n2_n2m1);
  r.bound_yyy = kPi * s.n2_n2m1 / 6.0;
  const double pedal_excess = kPi * s.n2 / 2.0;  // A - F

  r.slacks = {
      {std::string(bound::kDeltaNonnegative), r.delta},
      {std::string(bound::kPedalDominance), pedal_excess},
      {std::string(bound::kLowerGeneral), r.delta - r.bound_lower_general},
      {std::string(bound::kLowerGroemer), r.delta - r.bound_lower_groemer},
      {std::string(bound::kGeneralOverGroemer), r.bound_lower_general - r.bound_lower_groemer},
      {std::string(bound::kUpperHurwitz), r.bound_upper_hurwitz - r.delta},
      {std::string(bound::kPedalEvolute), r.bound_yyy - pedal_excess},
  };

  r.constant_width = is_constant_width(q, tol);
  if (r.constant_width) {
    r.bound_lower_cw = kPi2 * (16.0 * s.n2 / 9.0);
    r.bound_lower_groemer_cw = kPi2 * (16.0 * s.plain);
    r.slacks.push_back({std::string(bound::kLowerCw), r.delta - *r.bound_lower_cw});
    r.slacks.push_back({std::string(bound::kLowerGroemerCw), r.delta - *r.bound_lower_groemer_cw});
    r.slacks.push_back(
        {std::string(bound::kCwOverGroemerCw), *r.bound_lower_cw - *r.bound_lower_groemer_cw});
  }
  r.classification = classify_equality(q, tol);
  return r;
}

std::uint64_t sweep_curve_seed(std::uint64_t seed, std::size_t index) {
  return seed + static_cast<std::uint64_t>(index);
}

SweepSummary sweep(const SweepOptions& options) {
  if (options.count < 1) throw std::invalid_argument("sweep: count must be >= 1");

  struct Outcome {
    std::optional<DeficitReport> report;
    std::optional<ConvexityError> failure;
  };
  std::vector<FourierSupport> curves(options.count);
  std::vector<Outcome> outcomes(options.count);

  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      curves[i] = random_convex(options.degree, sweep_curve_seed(options.seed, i), options.min_radius,
                                options.constant_width_only);
      try {
        outcomes[i].report = analyze(curves[i], options.tol);
      } catch (const ConvexityError& e) {
        outcomes[i].failure = e;
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(options.count, 64)));
  if (threads == 1) {
    work(0, options.count);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (options.count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(options.count, t * chunk);
      const std::size_t end = std::min(options.count, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
  }

  SweepSummary summary;
  summary.count = options.count;
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::uint64_t curve_seed = sweep_curve_seed(options.seed, i);
    if (outcomes[i].failure) {
      summary.violations.push_back({curve_seed, "convexity", outcomes[i].failure->min_radius()});
      continue;
    }
    const DeficitReport& r = *outcomes[i].report;
    const double scale = std::max(1.0, std::abs(r.delta));
    for (const Slack& s : r.slacks) {
      const double normalized = s.value / scale;
      auto [it, inserted] = summary.min_slack_per_bound.try_emplace(s.name, normalized);
      if (!inserted) it->second = std::min(it->second, normalized);
      if (s.value < -options.tol * scale) summary.violations.push_back({curve_seed, s.name, s.value});
    }
    if (r.classification.kind == EqualityKind::Generic && r.delta > 0.0) {
      const double rel = (r.delta - r.bound_lower_general) / r.delta;
      if (!summary.tightest_witness || rel < summary.tightest_witness->relative_slack) {
        summary.tightest_witness = Witness{curve_seed, curves[i], rel};
      }
    }
  }
  std::stable_sort(summary.violations.begin(), summary.violations.end(),
                   [](const Violation& l, const Violation& r) { return l.seed < r.seed; });
  return summary;
}

std::vector<GridCellResult> equality_grid_check(int n, const std::vector<GridCell>& grid, double tol) {
  if (n != 2 && n != 3) throw std::invalid_argument("equality_grid_check: n must be 2 or 3");
  std::vector<GridCellResult> out;
  out.reserve(grid.size());
  for (const GridCell& cell : grid) {
    GridCellResult res{cell, CellStatus::SkippedNonConvex, 0.0, 0.0};
    const FourierSupport p(cell.a0, {{n, cell.a, cell.b}});
    if (!is_convex(p, -1e-9)) {
      out.push_back(res);
      continue;
    }
    const DeficitReport r = analyze(p, tol);
    res.delta = r.delta;
    if (n == 2) {
      res.bound = r.bound_lower_general;
      res.status = std::abs(r.delta - res.bound) <= tol * r.delta ? CellStatus::Pass : CellStatus::Fail;
    } else {
      res.bound = r.bound_lower_cw.value_or(std::numeric_limits<double>::quiet_NaN());
      const bool equal = r.constant_width && std::abs(r.delta - res.bound) <= tol * r.delta;
      res.status = equal ? CellStatus::Pass : CellStatus::Fail;
    }
    out.push_back(res);
  }
  return out;
}

}  // namespace suppcurve
