#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "suppcurve/support_series.hpp"

using namespace suppcurve;

namespace {

constexpr double kPi = std::numbers::pi;

const FourierSupport kAstroidParallel(5.0, {{2, 0.0, 1.0}});     // 5 + sin 2phi
const FourierSupport kHypocycloidParallel(8.0, {{3, 0.0, 1.0}});  // 8 + sin 3phi

}  // namespace

TEST_CASE("FourierSupport keeps a canonical sparse form") {
  const FourierSupport p(2.0, {{4, 0.0, 0.0}, {3, 1.0, 0.0}, {1, 0.0, 2.0}});
  CHECK(p.degree() == 3);
  REQUIRE(p.harmonics().size() == 2);
  CHECK(p.harmonics()[0].n == 1);
  CHECK(p.harmonics()[1].n == 3);
  CHECK(p.coefficient(3) == std::pair{1.0, 0.0});
  CHECK(p.coefficient(7) == std::pair{0.0, 0.0});
  CHECK(FourierSupport(1.0).degree() == 0);

  CHECK_THROWS_AS(FourierSupport(1.0, {{2, 1.0, 0.0}, {2, 0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(FourierSupport(1.0, {{0, 1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(FourierSupport(NAN), std::invalid_argument);
  CHECK_THROWS_AS(FourierSupport(1.0, {{2, INFINITY, 0.0}}), std::invalid_argument);
}

TEST_CASE("eval") {
  CHECK(eval(kAstroidParallel, kPi / 4, 0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(eval(FourierSupport(3.5), 1.234, 1) == 0.0);
  CHECK(eval(kAstroidParallel, 0.0, 2) == doctest::Approx(0.0));
  CHECK(std::abs(eval(kAstroidParallel, 0.0, 2)) < 1e-15);
  CHECK_THROWS_AS(eval(kAstroidParallel, 0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(eval(kAstroidParallel, 0.0, -1), std::invalid_argument);
  // reduced mod 2pi
  CHECK(eval(kAstroidParallel, kPi / 4 + 6 * kPi, 0) == doctest::Approx(6.0));
}

TEST_CASE("derivatives agree with centred finite differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  const double h = 1e-6;
  for (int trial = 0; trial < 200; ++trial) {
    const FourierSupport p = oracle::random_series(rng, 1 + trial % 9);
    double weight = 1.0;
    for (const Harmonic& t : p.harmonics()) weight += t.n * (std::abs(t.a) + std::abs(t.b));
    const double phi = angle(rng);
    for (int order = 1; order <= 3; ++order) {
      const double fd = (eval(p, phi + h, order - 1) - eval(p, phi - h, order - 1)) / (2 * h);
      double scale = weight;
      for (int k = 1; k < order; ++k) scale *= p.degree();
      CHECK(std::abs(eval(p, phi, order) - fd) <= 1e-5 * scale);
    }
  }
}

TEST_CASE("radius_of_curvature") {
  CHECK(radius_of_curvature(FourierSupport(2.5), 0.7) == doctest::Approx(2.5));
  CHECK(radius_of_curvature(kAstroidParallel, kPi / 4) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(radius_of_curvature(kHypocycloidParallel, kPi / 6)) < 1e-13);
}

TEST_CASE("min_curvature_radius matches the brute-force grid oracle") {
  // Oracle: 10^6-point minimisation of p + p''.
  const double astroid_min = oracle::min_curvature(oracle::from(kAstroidParallel));
  const double hypo_min = oracle::min_curvature(oracle::from(kHypocycloidParallel));
  CHECK(astroid_min == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(hypo_min) < 1e-12);

  const CurvatureMinimum a = min_curvature_radius(kAstroidParallel);
  CHECK(std::abs(a.value - 2.0) <= 1e-12 * 2.0);
  CHECK(a.argmin_phi == doctest::Approx(kPi / 4).epsilon(1e-6));  // also at 5pi/4
  CHECK(std::abs(min_curvature_radius(kHypocycloidParallel).value) <= 1e-12);
  CHECK(min_curvature_radius(FourierSupport(3.0)).value == 3.0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const FourierSupport p = oracle::random_series(rng, 2 + trial % 12);
    const double brute = oracle::min_curvature(oracle::from(p), 200'000);
    const double refined = min_curvature_radius(p).value;
    // The refined minimum can only be lower than any grid sample, and the
    // grid oracle is within its own discretisation error of the truth.
    CHECK(refined <= brute + 1e-12);
    CHECK(refined >= brute - 1e-6);
  }
}

TEST_CASE("is_convex") {
  CHECK(is_convex(kAstroidParallel, 1e-9));
  CHECK_FALSE(is_convex(kHypocycloidParallel, 1e-9));
  CHECK(is_convex(kHypocycloidParallel, -1e-9));
  const FourierSupport bad(1.0, {{2, 1.0, 0.0}});  // 1 + cos 2phi
  CHECK_FALSE(is_convex(bad, 0.0));
  CHECK(min_curvature_radius(bad).value == doctest::Approx(-2.0));
}

TEST_CASE("steiner_point, translate and recenter") {
  CHECK(steiner_point(kAstroidParallel) == PlanePoint{0.0, 0.0});
  CHECK(steiner_point(FourierSupport(3.0, {{1, 1.0, 0.0}})) == PlanePoint{1.0, 0.0});
  CHECK(steiner_point(FourierSupport(2.0, {{1, 0.0, 0.3}, {2, 0.1, 0.0}})) == PlanePoint{0.0, 0.3});

  CHECK(translate(FourierSupport(3.0, {{1, 1.0, 0.0}}), 1.0, 0.0) == FourierSupport(3.0));
  CHECK(translate(FourierSupport(2.0), 0.5, -1.0) == FourierSupport(2.0, {{1, -0.5, 1.0}}));

  const FourierSupport q(3.0, {{1, 1.0, 0.0}, {2, 0.0, 1.0}});
  CHECK(recenter_to_steiner(q) == FourierSupport(3.0, {{2, 0.0, 1.0}}));
  CHECK(recenter_to_steiner(kAstroidParallel) == kAstroidParallel);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const FourierSupport p = oracle::random_series(rng, 1 + trial % 7);
    const PlanePoint s = steiner_point(p);
    const PlanePoint moved = steiner_point(translate(p, s.x, s.y));
    CHECK(moved == PlanePoint{0.0, 0.0});
    const FourierSupport r = recenter_to_steiner(p);
    CHECK(steiner_point(r) == PlanePoint{0.0, 0.0});
    CHECK(r == translate(p, s.x, s.y));
    CHECK(r.degree() <= p.degree());

    // 1 + d^2/dphi^2 annihilates the n = 1 harmonic.
    const double a = u(rng);
    const double b = u(rng);
    const double phi = u(rng) * kPi;
    CHECK(std::abs(radius_of_curvature(translate(p, a, b), phi) - radius_of_curvature(p, phi)) <= 1e-12);
  }
}

TEST_CASE("width and constant width") {
  for (double phi : {0.0, 0.3, 1.7, 4.0}) {
    CHECK(width(kHypocycloidParallel, phi) == doctest::Approx(16.0).epsilon(1e-15));
    CHECK(width(kAstroidParallel, phi) == doctest::Approx(10.0 + 2.0 * std::sin(2 * phi)));
    CHECK(width(FourierSupport(1.5), phi) == doctest::Approx(3.0));
  }
  CHECK(is_constant_width(kHypocycloidParallel, 1e-12));
  CHECK_FALSE(is_constant_width(kAstroidParallel, 1e-12));
  CHECK(is_constant_width(FourierSupport(1.5), 0.0));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Harmonic> hs;
    for (int n = 1; n <= 9; n += 2) hs.push_back({n, u(rng), u(rng)});
    const FourierSupport odd(5.0, hs);
    CHECK(is_constant_width(odd, 1e-12));
    hs.push_back({2 * (1 + trial % 4), 0.0, 1e-6});
    CHECK_FALSE(is_constant_width(FourierSupport(5.0, hs), 1e-9));
  }
}

TEST_CASE("random_convex") {
  CHECK(random_convex(0, 17, 0.05) == FourierSupport(1.0));
  CHECK(random_convex(1, 17, 0.05) == FourierSupport(1.0));
  CHECK(random_convex(8, 42, 0.05) == random_convex(8, 42, 0.05));
  CHECK_FALSE(random_convex(8, 42, 0.05) == random_convex(8, 43, 0.05));
  CHECK(random_convex(6, 1, 1.5) == FourierSupport(1.0));  // lambda = 0 fallback
  CHECK_THROWS_AS(random_convex(-1, 0, 0.05), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const FourierSupport p = random_convex(8, seed, 0.05);
    CHECK(p.a0() == 1.0);
    CHECK(steiner_point(p) == PlanePoint{0.0, 0.0});
    CHECK(p.degree() <= 8);
    CHECK(is_convex(p, 0.02));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const FourierSupport p = random_convex(9, seed, 0.05, true);
    CHECK(is_constant_width(p, 0.0));
    CHECK(is_convex(p, 0.025));
  }
}

TEST_CASE("from_samples") {
  std::vector<double> samples(16);
  for (int k = 0; k < 16; ++k) samples[k] = 5.0 + std::sin(2.0 * (2 * kPi * k / 16));
  const FourierSupport p = from_samples(samples, 4);
  CHECK(p.a0() == doctest::Approx(5.0).epsilon(1e-14));
  for (int n = 1; n <= 4; ++n) {
    const auto [a, b] = p.coefficient(n);
    CHECK(std::abs(a) <= 1e-12);
    CHECK(std::abs(b - (n == 2 ? 1.0 : 0.0)) <= 1e-12);
  }

  const std::vector<double> flat(7, 2.25);
  CHECK(from_samples(flat, 3).a0() == doctest::Approx(2.25));
  CHECK_THROWS_AS(from_samples(flat, 4), std::invalid_argument);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const FourierSupport p = oracle::random_series(rng, 1 + trial % 12);
    const std::size_t M = 2 * static_cast<std::size_t>(p.degree()) + 2;
    std::vector<double> values(M);
    for (std::size_t k = 0; k < M; ++k) values[k] = oracle::value(oracle::from(p), 2 * kPi * k / M);
    const FourierSupport back = from_samples(values, p.degree());
    CHECK(std::abs(back.a0() - p.a0()) <= 1e-12);
    for (int n = 1; n <= p.degree(); ++n) {
      CHECK(std::abs(back.coefficient(n).first - p.coefficient(n).first) <= 1e-12);
      CHECK(std::abs(back.coefficient(n).second - p.coefficient(n).second) <= 1e-12);
    }
  }
}

TEST_CASE("sample_uniform agrees with eval") {
  std::mt19937_64 rng(2);
  const FourierSupport p = oracle::random_series(rng, 10);
  const std::size_t M = 333;
  for (int order = 0; order <= 3; ++order) {
    const std::vector<double> v = sample_uniform(p, M, order);
    for (std::size_t k = 0; k < M; k += 17) {
      CHECK(v[k] == doctest::Approx(eval(p, 2 * kPi * k / M, order)).epsilon(1e-12));
    }
  }
}
