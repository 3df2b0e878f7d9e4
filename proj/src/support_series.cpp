#include "suppcurve/support_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "trig_table.hpp"

namespace suppcurve {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Coefficients of the order-th derivative of a single harmonic.
// d/dphi maps (a, b) to (n b, -n a).
std::pair<double, double> differentiate(const Harmonic& h, int order) {
  double a = h.a;
  double b = h.b;
  for (int k = 0; k < order; ++k) {
    const double na = h.n * b;
    const double nb = -h.n * a;
    a = na;
    b = nb;
  }
  return {a, b};
}

double eval_any_order(const FourierSupport& p, double phi, int order) {
  double sum = order == 0 ? p.a0() : 0.0;
  for (const Harmonic& h : p.harmonics()) {
    const auto [a, b] = differentiate(h, order);
    const double arg = h.n * phi;
    sum += a * std::cos(arg) + b * std::sin(arg);
  }
  return sum;
}

double curvature_slope(const FourierSupport& p, double phi) {
  return eval_any_order(p, phi, 1) + eval_any_order(p, phi, 3);
}

double curvature_slope_derivative(const FourierSupport& p, double phi) {
  return eval_any_order(p, phi, 2) + eval_any_order(p, phi, 4);
}

double unit_uniform(std::mt19937_64& rng) {
  // 53 random bits; identical on every standard library.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FourierSupport::FourierSupport(double a0, std::vector<Harmonic> harmonics) : a0_(a0) {
  if (!std::isfinite(a0)) throw std::invalid_argument("FourierSupport: a0 is not finite");
  std::sort(harmonics.begin(), harmonics.end(),
            [](const Harmonic& l, const Harmonic& r) { return l.n < r.n; });
  for (std::size_t i = 0; i < harmonics.size(); ++i) {
    const Harmonic& h = harmonics[i];
    if (h.n < 1) {
      throw std::invalid_argument("FourierSupport: harmonic index must be >= 1, got " +
                                  std::to_string(h.n));
    }
    if (!std::isfinite(h.a) || !std::isfinite(h.b)) {
      throw std::invalid_argument("FourierSupport: coefficient of harmonic " +
                                  std::to_string(h.n) + " is not finite");
    }
    if (i > 0 && harmonics[i - 1].n == h.n) {
      throw std::invalid_argument("FourierSupport: duplicate harmonic " + std::to_string(h.n));
    }
  }
  std::erase_if(harmonics, [](const Harmonic& h) { return h.a == 0.0 && h.b == 0.0; });
  harmonics_ = std::move(harmonics);
}

std::pair<double, double> FourierSupport::coefficient(int n) const noexcept {
  if (n == 0) return {a0_, 0.0};
  const auto it = std::lower_bound(harmonics_.begin(), harmonics_.end(), n,
                                   [](const Harmonic& h, int key) { return h.n < key; });
  if (it == harmonics_.end() || it->n != n) return {0.0, 0.0};
  return {it->a, it->b};
}

double wrap_angle(double phi) noexcept {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double eval(const FourierSupport& p, double phi, int order) {
  if (order < 0 || order > 3) {
    throw std::invalid_argument("eval: derivative order must be in {0,1,2,3}, got " +
                                std::to_string(order));
  }
  return eval_any_order(p, wrap_angle(phi), order);
}

double radius_of_curvature(const FourierSupport& p, double phi) {
  return eval(p, phi, 0) + eval(p, phi, 2);
}

CurvatureMinimum min_curvature_radius(const FourierSupport& p) {
  const std::size_t grid = std::max<std::size_t>(4096, 64 * static_cast<std::size_t>(p.degree()));
  if (p.harmonics().empty()) return {p.a0(), 0.0};

  const std::vector<double> rho = [&] {
    std::vector<double> v = sample_uniform(p, grid, 0);
    const std::vector<double> d2 = sample_uniform(p, grid, 2);
    for (std::size_t k = 0; k < grid; ++k) v[k] += d2[k];
    return v;
  }();

  // Local minima of the periodic grid, lowest first.
  std::vector<std::size_t> cells;
  for (std::size_t k = 0; k < grid; ++k) {
    const double prev = rho[(k + grid - 1) % grid];
    const double next = rho[(k + 1) % grid];
    if (rho[k] <= prev && rho[k] <= next) cells.push_back(k);
  }
  std::sort(cells.begin(), cells.end(),
            [&](std::size_t l, std::size_t r) { return rho[l] < rho[r]; });
  if (cells.size() > 8) cells.resize(8);

  const double step = kTwoPi / static_cast<double>(grid);
  CurvatureMinimum best{rho[cells.front()], step * static_cast<double>(cells.front())};
  for (std::size_t k : cells) {
    const double start = step * static_cast<double>(k);
    double phi = start;
    for (int it = 0; it < 30; ++it) {
      const double g = curvature_slope(p, phi);
      const double dg = curvature_slope_derivative(p, phi);
      if (!(dg > 0.0)) break;
      const double next = phi - g / dg;
      if (std::abs(next - start) > 2.0 * step) break;
      const bool done = std::abs(next - phi) < 1e-15 * (1.0 + std::abs(phi));
      phi = next;
      if (done) break;
    }
    const double value = radius_of_curvature(p, phi);
    if (value < best.value) best = {value, wrap_angle(phi)};
  }
  return best;
}

bool is_convex(const FourierSupport& p, double tol) { return min_curvature_radius(p).value > tol; }

PlanePoint steiner_point(const FourierSupport& p) {
  const auto [a1, b1] = p.coefficient(1);
  return {a1, b1};
}

FourierSupport translate(const FourierSupport& p, double a, double b) {
  std::vector<Harmonic> hs(p.harmonics().begin(), p.harmonics().end());
  auto it = std::find_if(hs.begin(), hs.end(), [](const Harmonic& h) { return h.n == 1; });
  if (it == hs.end()) {
    hs.push_back({1, -a, -b});
  } else {
    it->a -= a;
    it->b -= b;
  }
  return FourierSupport(p.a0(), std::move(hs));
}

FourierSupport recenter_to_steiner(const FourierSupport& p) {
  std::vector<Harmonic> hs;
  for (const Harmonic& h : p.harmonics()) {
    if (h.n != 1) hs.push_back(h);
  }
  return FourierSupport(p.a0(), std::move(hs));
}

double width(const FourierSupport& p, double phi) {
  return eval(p, phi, 0) + eval(p, phi + std::numbers::pi, 0);
}

bool is_constant_width(const FourierSupport& p, double tol) {
  return std::none_of(p.harmonics().begin(), p.harmonics().end(), [tol](const Harmonic& h) {
    return h.n % 2 == 0 && std::max(std::abs(h.a), std::abs(h.b)) > tol;
  });
}

FourierSupport random_convex(int degree, std::uint64_t seed, double min_radius, bool odd_only) {
  if (degree < 0) throw std::invalid_argument("random_convex: degree must be >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Harmonic> hs;
  for (int n = 2; n <= degree; ++n) {
    const double decay = 1.0 / (static_cast<double>(n) * n * n);
    const double a = (2.0 * unit_uniform(rng) - 1.0) * decay;
    const double b = (2.0 * unit_uniform(rng) - 1.0) * decay;
    if (odd_only && n % 2 == 0) continue;
    hs.push_back({n, a, b});
  }
  const FourierSupport shape(0.0, hs);
  if (shape.harmonics().empty()) return FourierSupport(1.0);

  // min over phi of 1 + lambda h(phi) is 1 + lambda min h, so the largest
  // admissible lambda follows from the refined minimum of the harmonic part.
  const double hmin = min_curvature_radius(shape).value;
  double lambda = 1.0;
  if (1.0 + hmin < min_radius) lambda = hmin < 0.0 ? std::max(0.0, (1.0 - min_radius) / -hmin) : 0.0;
  if (lambda == 0.0) return FourierSupport(1.0);
  for (Harmonic& h : hs) {
    h.a *= lambda;
    h.b *= lambda;
  }
  return FourierSupport(1.0, std::move(hs));
}

FourierSupport from_samples(std::span<const double> values, int degree) {
  const std::size_t M = values.size();
  if (degree < 0) throw std::invalid_argument("from_samples: degree must be >= 0");
  if (M < 2 * static_cast<std::size_t>(degree) + 1) {
    throw std::invalid_argument("from_samples: need at least 2*degree+1 samples, got " +
                                std::to_string(M));
  }
  const detail::TrigTable table(M);
  double sum = 0.0;
  for (double v : values) sum += v;
  const double scale = 2.0 / static_cast<double>(M);
  std::vector<Harmonic> hs;
  for (int n = 1; n <= degree; ++n) {
    double a = 0.0;
    double b = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
      a += values[k] * table.cos(static_cast<std::size_t>(n) * k);
      b += values[k] * table.sin(static_cast<std::size_t>(n) * k);
    }
    hs.push_back({n, a * scale, b * scale});
  }
  return FourierSupport(sum / static_cast<double>(M), std::move(hs));
}

std::vector<double> sample_uniform(const FourierSupport& p, std::size_t M, int order) {
  if (order < 0 || order > 3) throw std::invalid_argument("sample_uniform: order must be in {0,1,2,3}");
  const detail::TrigTable table(M);
  std::vector<double> out(M, order == 0 ? p.a0() : 0.0);
  for (const Harmonic& h : p.harmonics()) {
    const auto [a, b] = differentiate(h, order);
    const auto n = static_cast<std::size_t>(h.n);
    for (std::size_t k = 0; k < M; ++k) out[k] += a * table.cos(n * k) + b * table.sin(n * k);
  }
  return out;
}

}  // namespace suppcurve
