#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace suppcurve::detail {

// cos and sin of 2 pi j / M; index arithmetic is taken mod M, so
// cos(n phi_k) is looked up exactly as cos(j) with j = n k mod M.
class TrigTable {
 public:
  explicit TrigTable(std::size_t M) : M_(M), cos_(M), sin_(M) {
    if (M == 0) throw std::invalid_argument("TrigTable: empty grid");
    for (std::size_t j = 0; j < M; ++j) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
      cos_[j] = std::cos(t);
      sin_[j] = std::sin(t);
    }
  }

  double cos(std::size_t j) const { return cos_[j % M_]; }
  double sin(std::size_t j) const { return sin_[j % M_]; }

 private:
  std::size_t M_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

}  // namespace suppcurve::detail
