#include "suppcurve/curve_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace suppcurve {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kSimilarityGrid = 1024;
// Below this coefficient norm a support is treated as the zero function.
constexpr double kZeroNorm = 1e-12;

double wrap_to(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

double coefficient_norm(const FourierSupport& p) {
  double sum = 2.0 * p.a0() * p.a0();
  for (const Harmonic& h : p.harmonics()) sum += h.a * h.a + h.b * h.b;
  return std::sqrt(sum);
}

PlanePoint rotated(PlanePoint q, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * q.x - s * q.y, s * q.x + c * q.y};
}

double sup_deviation(const FourierSupport& target, const FourierSupport& scaled_source,
                     double theta) {
  double worst = 0.0;
  for (int k = 0; k < kSimilarityGrid; ++k) {
    const double phi = kTwoPi * k / kSimilarityGrid;
    const PlanePoint t = boundary_point(target, phi);
    const PlanePoint s = rotated(boundary_point(scaled_source, phi - theta), theta);
    worst = std::max(worst, std::hypot(t.x - s.x, t.y - s.y));
  }
  return worst;
}

}  // namespace

PlanePoint boundary_point(const FourierSupport& p, double phi) {
  const double v = eval(p, phi, 0);
  const double d = eval(p, phi, 1);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {v * c - d * s, v * s + d * c};
}

PlanePoint pedal_point(const FourierSupport& p, double phi) {
  const double v = eval(p, phi, 0);
  return {v * std::cos(phi), v * std::sin(phi)};
}

FourierSupport evolute_support(const FourierSupport& p) {
  std::vector<Harmonic> hs;
  for (const Harmonic& h : p.harmonics()) {
    // p' coefficients, then the quarter-turn shift with exact cos/sin(n pi/2).
    const double da = h.n * h.b;
    const double db = -h.n * h.a;
    static constexpr int kCos[4] = {1, 0, -1, 0};
    static constexpr int kSin[4] = {0, 1, 0, -1};
    const int c = kCos[h.n % 4];
    const int s = kSin[h.n % 4];
    hs.push_back({h.n, -(da * c + db * s), -(db * c - da * s)});
  }
  return FourierSupport(0.0, std::move(hs));
}

FourierSupport parallel_support(const FourierSupport& p, double r) {
  return FourierSupport(p.a0() - r, std::vector<Harmonic>(p.harmonics().begin(), p.harmonics().end()));
}

FourierSupport rotate(const FourierSupport& p, double theta) {
  std::vector<Harmonic> hs;
  for (const Harmonic& h : p.harmonics()) {
    const double c = std::cos(h.n * theta);
    const double s = std::sin(h.n * theta);
    hs.push_back({h.n, h.a * c - h.b * s, h.a * s + h.b * c});
  }
  return FourierSupport(p.a0(), std::move(hs));
}

FourierSupport scale(const FourierSupport& p, double lambda) {
  std::vector<Harmonic> hs;
  for (const Harmonic& h : p.harmonics()) hs.push_back({h.n, lambda * h.a, lambda * h.b});
  return FourierSupport(lambda * p.a0(), std::move(hs));
}

FourierSupport astroid_support(double a) { return FourierSupport(0.0, {{2, 0.0, a}}); }

PlanePoint astroid_param_point(double a, double phi) {
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  return {2.0 * a * s * s * s, 2.0 * a * c * c * c};
}

FourierSupport hypocycloid3_support(double a) { return FourierSupport(0.0, {{3, a, 0.0}}); }

PlanePoint hypocycloid3_param_point(double a, double t) {
  return {-2.0 * a * std::cos(t) - a * std::cos(2.0 * t),
          -2.0 * a * std::sin(t) + a * std::sin(2.0 * t)};
}

CanonicalPhase canonical_phase(const FourierSupport& p) {
  const auto hs = p.harmonics();
  if (hs.size() != 1 || (hs[0].n != 2 && hs[0].n != 3)) {
    throw std::invalid_argument(
        "canonical_phase: support must have exactly one harmonic besides a0, of index 2 or 3");
  }
  const Harmonic& h = hs[0];
  const double period = kTwoPi / h.n;
  return {h.n, p.a0(), std::hypot(h.a, h.b), wrap_to(std::atan2(h.b, h.a) / h.n, period)};
}

FourierSupport canonical_form(const CanonicalPhase& c) {
  if (c.n == 2) return FourierSupport(c.a0, {{2, 0.0, c.amplitude}});
  if (c.n == 3) return FourierSupport(c.a0, {{3, c.amplitude, 0.0}});
  throw std::invalid_argument("canonical_form: harmonic index must be 2 or 3");
}

FourierSupport reconstruct(const CanonicalPhase& c) {
  const double shift = c.n == 2 ? c.phi0 - kPi / 4.0 : c.phi0;
  return rotate(canonical_form(c), shift);
}

SimilarityReport similarity_between(const FourierSupport& target, const FourierSupport& source) {
  const double target_norm = coefficient_norm(target);
  const double source_norm = coefficient_norm(source);
  if (target_norm <= kZeroNorm || source_norm <= kZeroNorm) {
    double extent = 0.0;
    for (int k = 0; k < kSimilarityGrid; ++k) {
      const PlanePoint t = boundary_point(target, kTwoPi * k / kSimilarityGrid);
      extent = std::max(extent, std::hypot(t.x, t.y));
    }
    return {0.0, 0.0, extent, true};
  }

  const double ratio = target_norm / source_norm;
  const FourierSupport scaled_source = scale(source, ratio);

  // Rotating by theta multiplies a_n + i b_n by exp(i n theta); match the
  // phase of the strongest source harmonic.
  const Harmonic* dominant = nullptr;
  for (const Harmonic& h : source.harmonics()) {
    if (dominant == nullptr || h.a * h.a + h.b * h.b > dominant->a * dominant->a + dominant->b * dominant->b) {
      dominant = &h;
    }
  }
  std::vector<double> candidates{0.0};
  if (dominant != nullptr) {
    candidates.clear();
    const auto [ta, tb] = target.coefficient(dominant->n);
    const double phase = std::atan2(tb, ta) - std::atan2(dominant->b, dominant->a);
    for (int k = 0; k < dominant->n; ++k) {
      candidates.push_back(wrap_to((phase + kTwoPi * k) / dominant->n, kTwoPi));
    }
    std::sort(candidates.begin(), candidates.end());
  }

  SimilarityReport best{ratio, candidates.front(), sup_deviation(target, scaled_source, candidates.front()), false};
  for (double theta : candidates) {
    const double dev = sup_deviation(target, scaled_source, theta);
    if (dev < best.max_deviation - 1e-12) {
      best.rotation = theta;
      best.max_deviation = dev;
    }
  }
  return best;
}

int cusp_count(const FourierSupport& p) {
  constexpr std::size_t kGrid = 4096;
  const std::vector<double> v = sample_uniform(p, kGrid, 0);
  const std::vector<double> d2 = sample_uniform(p, kGrid, 2);
  std::vector<int> signs;
  for (std::size_t k = 0; k < kGrid; ++k) {
    const double rho = v[k] + d2[k];
    // Exact zeros sit on a cusp; the sign change is counted across them.
    if (std::abs(rho) > 1e-12 * (1.0 + coefficient_norm(p))) signs.push_back(rho > 0.0 ? 1 : -1);
  }
  if (signs.empty()) return 0;
  int changes = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] != signs[(k + 1) % signs.size()]) ++changes;
  }
  const bool antiperiodic =
      std::abs(p.a0()) <= 1e-12 * coefficient_norm(p) && std::all_of(p.harmonics().begin(), p.harmonics().end(),
                                   [](const Harmonic& h) { return h.n % 2 == 1; });
  return antiperiodic ? changes / 2 : changes;
}

}  // namespace suppcurve
