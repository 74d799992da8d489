#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lieframe/algebra.hpp"
#include "lieframe/grid.hpp"

namespace lieframe {

/// Sampled Frenet apparatus (T, N, B, kappa, tau, tau_G, H, sigma) of one
/// curve over a uniform arc-length grid.
struct ApparatusField {
  Grid grid;
  std::vector<AlgebraVector> T, N, B;
  std::vector<double> kappa;
  std::vector<double> tau;
  std::vector<double> tauG;
  std::vector<double> H;
  std::vector<double> sigma;
  std::vector<bool> sigma_defined;

  explicit ApparatusField(const Grid& g);

  std::size_t size() const { return grid.size(); }
  /// tau - tau_G, the coefficient in the N and B rows of the Frenet matrix.
  double twist(std::size_t i) const { return tau[i] - tauG[i]; }
  std::vector<double> twist() const;
};

using ScalarFunction = std::function<double(double)>;

/// Intrinsic definition of a curve: curvature and torsion as functions of arc
/// length, a sampling grid, the group structure and the frame at s0.
struct CurveSpec {
  ScalarFunction kappa;
  ScalarFunction tau;
  Grid grid;
  LieStructure structure;
  Frame initial_frame;
};

inline constexpr double kCurvatureFloor = 1e-12;
inline constexpr double kDerivativeFloor = 1e-10;

/// H = (tau - tau_G) / kappa. Throws Error(NonPositiveCurvature) for kappa <= 0.
double harmonic_curvature(double kappa, double tau, double tau_G);

/// Integrates dT/ds = kappa N, dN/ds = -kappa T + (tau - tau_G) B,
/// dB/ds = -(tau - tau_G) N with classical RK4 at the grid step, projecting the
/// frame back onto SO(3) after every step.
ApparatusField integrate_frenet(const CurveSpec& spec);

/// Recovers the apparatus of a unit-speed curve from its sampled unit tangent.
/// Throws Error(NonPositiveCurvature) if |dT/ds| < 1e-10 at any sample.
ApparatusField apparatus_from_tangent(std::span<const AlgebraVector> tangent, const Grid& grid,
                                      const LieStructure& lie);

/// Apparatus recovered from a unit tangent sampled on a uniform grid in some
/// parameter u, with ds/du = speed[i] (may be negative). Samples where the
/// frame cannot be built are flagged instead of raising. Derivatives use
/// stencils `stride` samples wide.
struct TangentFrame {
  ApparatusField field;
  std::vector<bool> defined;
};
TangentFrame frame_from_tangent(std::span<const AlgebraVector> tangent, const Grid& grid,
                                std::span<const double> speed, const LieStructure& lie, std::size_t stride = 1);

struct SigmaField {
  std::vector<double> values;
  std::vector<bool> defined;
};

/// sigma = kappa (1 + H^2)^{3/2} / H' with H' by finite differences; flagged
/// undefined where |H'| <= 1e-10.
SigmaField sigma_function(const ApparatusField& app);

/// Same, for a field whose grid parameter u is not arc length: H' = (dH/du) / speed.
SigmaField sigma_function(const ApparatusField& app, std::span<const double> speed, std::size_t stride = 1);

struct HelixClass {
  bool planar{false};
  bool general_helix{false};
  bool slant_helix{false};

  friend bool operator==(const HelixClass&, const HelixClass&) = default;
};

inline constexpr double kDefaultClassifyTolerance = 1e-6;

HelixClass classify(const ApparatusField& app, double tol = kDefaultClassifyTolerance);

}  // namespace lieframe
