#include "suppcurve/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace suppcurve {

namespace {

constexpr double kPi = std::numbers::pi;

double energy(const Harmonic& h) { return h.a * h.a + h.b * h.b; }

std::vector<double> squares(std::vector<double> v) {
  for (double& x : v) x *= x;
  return v;
}

// (1/2) integral (f^2 - g^2) for sampled f, g.
double half_difference_of_squares(const std::vector<double>& f, const std::vector<double>& g) {
  std::vector<double> integrand(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) integrand[k] = 0.5 * (f[k] * f[k] - g[k] * g[k]);
  return integrate_periodic(integrand);
}

}  // namespace

std::size_t quadrature_grid(const FourierSupport& p) {
  return std::max<std::size_t>(4096, 4 * static_cast<std::size_t>(p.degree()) + 1);
}

double integrate_periodic(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("integrate_periodic: no samples");
  double sum = 0.0;
  for (double v : samples) sum += v;
  return 2.0 * kPi * sum / static_cast<double>(samples.size());
}

double length(const FourierSupport& p, Mode mode) {
  if (mode == Mode::closed_form) return 2.0 * kPi * p.a0();
  return integrate_periodic(sample_uniform(p, quadrature_grid(p), 0));
}

double signed_area(const FourierSupport& p, Mode mode) {
  if (mode == Mode::quadrature) {
    const std::size_t M = quadrature_grid(p);
    return half_difference_of_squares(sample_uniform(p, M, 0), sample_uniform(p, M, 1));
  }
  double sum = 0.0;
  for (const Harmonic& h : p.harmonics()) sum += (1.0 - static_cast<double>(h.n) * h.n) * energy(h);
  return kPi * p.a0() * p.a0() + 0.5 * kPi * sum;
}

double pedal_area(const FourierSupport& p, Mode mode) {
  if (mode == Mode::quadrature) {
    return 0.5 * integrate_periodic(squares(sample_uniform(p, quadrature_grid(p), 0)));
  }
  double sum = 0.0;
  for (const Harmonic& h : p.harmonics()) sum += energy(h);
  return kPi * p.a0() * p.a0() + 0.5 * kPi * sum;
}

double evolute_area(const FourierSupport& p, Mode mode) {
  if (mode == Mode::quadrature) {
    const std::size_t M = quadrature_grid(p);
    return half_difference_of_squares(sample_uniform(p, M, 1), sample_uniform(p, M, 2));
  }
  double sum = 0.0;
  for (const Harmonic& h : p.harmonics()) {
    const double n2 = static_cast<double>(h.n) * h.n;
    sum += n2 * (1.0 - n2) * energy(h);
  }
  return 0.5 * kPi * sum;
}

double isoperimetric_deficit(const FourierSupport& p, Mode mode) {
  if (mode == Mode::quadrature) {
    const double L = length(p, mode);
    return L * L - 4.0 * kPi * signed_area(p, mode);
  }
  double sum = 0.0;
  for (const Harmonic& h : p.harmonics()) {
    if (h.n >= 2) sum += (static_cast<double>(h.n) * h.n - 1.0) * energy(h);
  }
  return 2.0 * kPi * kPi * sum;
}

double delta2_squared(const FourierSupport& p, Mode mode) {
  if (mode == Mode::quadrature) {
    const auto [a1, b1] = p.coefficient(1);
    const std::size_t M = quadrature_grid(p);
    std::vector<double> diff = sample_uniform(p, M, 0);
    for (std::size_t k = 0; k < M; ++k) {
      const double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(M);
      diff[k] -= p.a0() + a1 * std::cos(phi) + b1 * std::sin(phi);
    }
    return integrate_periodic(squares(std::move(diff)));
  }
  double sum = 0.0;
  for (const Harmonic& h : p.harmonics()) {
    if (h.n >= 2) sum += energy(h);
  }
  return kPi * sum;
}

double parallel_area(const FourierSupport& p, double r, Mode mode) {
  if (mode == Mode::quadrature) {
    const FourierSupport inner(p.a0() - r,
                               std::vector<Harmonic>(p.harmonics().begin(), p.harmonics().end()));
    return signed_area(inner, mode);
  }
  return signed_area(p) - length(p) * r + kPi * r * r;
}

double deficit_via_parallel(const FourierSupport& p, Mode mode) {
  return -4.0 * kPi * parallel_area(p, length(p, mode) / (2.0 * kPi), mode);
}

}  // namespace suppcurve
