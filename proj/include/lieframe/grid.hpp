#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lieframe/algebra.hpp"

namespace lieframe {

/// Samples excluded at each end from every constancy or residual verdict:
/// derivatives there come from lower-order one-sided stencils.
inline constexpr std::size_t kBoundaryBand = 2;

/// Uniform discretization of an arc-length interval [s0, s1] with n samples.
class Grid {
 public:
  static constexpr std::size_t kMinSamples = 9;

  /// Throws Error(InvalidGrid) unless n >= 9 and s1 > s0 (both finite).
  Grid(double s0, double s1, std::size_t n);

  double s0() const { return s0_; }
  double s1() const { return s1_; }
  std::size_t size() const { return n_; }
  double spacing() const { return h_; }
  double at(std::size_t i) const;
  std::vector<double> values() const;

  /// Interior samples, i.e. outside the boundary band of `band` samples.
  bool is_interior(std::size_t i, std::size_t band = kBoundaryBand) const {
    return i >= band && i + band < n_;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double s0_;
  double s1_;
  std::size_t n_;
  double h_;
};

/// Finite-difference derivatives on a uniform grid: fourth-order central
/// stencils in the interior, second-order stencils on the two samples at
/// each end.
namespace fd {

template <typename V>
std::vector<V> first_derivative(std::span<const V> f, double h) {
  const std::size_t n = f.size();
  std::vector<V> d(n);
  const double inv12h = 1.0 / (12.0 * h);
  const double inv2h = 1.0 / (2.0 * h);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * inv12h;
  }
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2h;
  d[1] = (f[2] - f[0]) * inv2h;
  d[n - 2] = (f[n - 1] - f[n - 3]) * inv2h;
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2h;
  return d;
}

template <typename V>
std::vector<V> second_derivative(std::span<const V> f, double h) {
  const std::size_t n = f.size();
  std::vector<V> d(n);
  const double inv12h2 = 1.0 / (12.0 * h * h);
  const double invh2 = 1.0 / (h * h);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (-1.0 * f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * inv12h2;
  }
  d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * invh2;
  d[1] = (f[0] - 2.0 * f[1] + f[2]) * invh2;
  d[n - 2] = (f[n - 3] - 2.0 * f[n - 2] + f[n - 1]) * invh2;
  d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * invh2;
  return d;
}

template <typename V>
std::vector<V> first_derivative(const std::vector<V>& f, double h) {
  return first_derivative(std::span<const V>(f), h);
}

template <typename V>
std::vector<V> second_derivative(const std::vector<V>& f, double h) {
  return second_derivative(std::span<const V>(f), h);
}

/// Same stencils with neighbours `stride` samples apart (spacing stride*h)
/// wherever they fit; unit-stride values elsewhere. A wider spacing trades
/// truncation error for less roundoff amplification in chained derivatives.
template <typename V>
std::vector<V> first_derivative(std::span<const V> f, double h, std::size_t stride) {
  std::vector<V> d = first_derivative(f, h);
  const std::size_t n = f.size();
  const std::size_t k = stride;
  if (k <= 1) return d;
  const double inv = 1.0 / (12.0 * static_cast<double>(k) * h);
  for (std::size_t i = 2 * k; i + 2 * k < n; ++i) {
    d[i] = (f[i - 2 * k] - 8.0 * f[i - k] + 8.0 * f[i + k] - f[i + 2 * k]) * inv;
  }
  return d;
}

template <typename V>
std::vector<V> second_derivative(std::span<const V> f, double h, std::size_t stride) {
  std::vector<V> d = second_derivative(f, h);
  const std::size_t n = f.size();
  const std::size_t k = stride;
  if (k <= 1) return d;
  const double kh = static_cast<double>(k) * h;
  const double inv = 1.0 / (12.0 * kh * kh);
  for (std::size_t i = 2 * k; i + 2 * k < n; ++i) {
    d[i] = (-1.0 * f[i - 2 * k] + 16.0 * f[i - k] - 30.0 * f[i] + 16.0 * f[i + k] - f[i + 2 * k]) * inv;
  }
  return d;
}

}  // namespace fd

/// Stencil stride whose width is closest to `spacing`, at least 1.
std::size_t stride_for_spacing(const Grid& grid, double spacing);

/// Cumulative trapezoidal integral of uniformly sampled values, starting at 0.
std::vector<double> cumulative_trapezoid(std::span<const double> f, double h);

}  // namespace lieframe
