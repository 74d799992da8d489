#include "lieframe/grid.hpp"

#include <cmath>
#include <string>

#include "lieframe/error.hpp"

namespace lieframe {

Grid::Grid(double s0, double s1, std::size_t n) : s0_(s0), s1_(s1), n_(n), h_(0.0) {
  if (n < kMinSamples) {
    throw Error(ErrorCode::InvalidGrid,
                "grid needs at least " + std::to_string(kMinSamples) + " samples, got " + std::to_string(n));
  }
  if (!std::isfinite(s0) || !std::isfinite(s1) || !(s1 > s0)) {
    throw Error(ErrorCode::InvalidGrid, "grid interval must satisfy s0 < s1");
  }
  h_ = (s1 - s0) / static_cast<double>(n - 1);
}

double Grid::at(std::size_t i) const {
  if (i + 1 == n_) return s1_;
  return s0_ + h_ * static_cast<double>(i);
}

std::vector<double> Grid::values() const {
  std::vector<double> v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = at(i);
  return v;
}

std::size_t stride_for_spacing(const Grid& grid, double spacing) {
  const double k = std::round(spacing / grid.spacing());
  return k < 1.0 ? 1 : static_cast<std::size_t>(k);
}

std::vector<double> cumulative_trapezoid(std::span<const double> f, double h) {
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t i = 1; i < f.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  }
  return out;
}

}  // namespace lieframe
