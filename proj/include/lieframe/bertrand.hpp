#pragma once

#include <cstddef>
#include <vector>

#include "lieframe/frenet.hpp"

namespace lieframe {

/// Pointwise scalar data of the mate curve that every closed form in the
/// Bertrand and indicatrix modules is built from.
struct MatePoint {
  double kappa{0.0};    ///< mate curvature
  double dkappa{0.0};   ///< its first derivative in the mate arc length
  double ddkappa{0.0};  ///< its second derivative
  double H{0.0};        ///< mate harmonic curvature
  double rho{0.0};      ///< (tau - tau_G)' / kappa'
};

/// Stencil spacing for the mate derivatives kappa', kappa'' and
/// (tau - tau_G)'. Every closed form downstream inherits their roundoff, and a
/// fixed spacing keeps it from growing as the grid is refined.
inline constexpr double kDerivativeSpacing = 2e-3;

/// Per-sample scalars of the mate apparatus. Derivatives are finite
/// differences on the mate grid with stencils kDerivativeSpacing wide.
struct MateScalars {
  std::vector<double> kappa, dkappa, ddkappa;
  std::vector<double> twist, dtwist;
  std::vector<double> H;
  std::vector<double> rho;
  std::vector<bool> rho_singular;

  std::size_t size() const { return kappa.size(); }
  MatePoint at(std::size_t i) const { return {kappa[i], dkappa[i], ddkappa[i], H[i], rho[i]}; }
};

inline constexpr double kSingularThreshold = 1e-10;

/// Builds MateScalars. Throws Error(HelicalDegenerate) when |kappa'| <= 1e-10
/// on more than half of the interior samples.
MateScalars mate_scalars(const ApparatusField& mate);

struct RhoField {
  std::vector<double> values;
  std::vector<bool> singular;
};

/// rho = (tau - tau_G)' / kappa', flagged where |kappa'| <= 1e-10.
RhoField rho(const ApparatusField& mate);

struct LambdaField {
  std::vector<double> values;
  std::vector<bool> singular;
};

/// lambda = -eps rho / (kappa (rho - H)).
double lambda_value(double rho, double kappa, double H, int epsilon);

/// Per-sample lambda, flagged where rho is undefined or |rho - H| <= 1e-10.
LambdaField lambda_from_rho(const ApparatusField& mate, int epsilon);

/// Outcome of testing whether a curve admits a Bertrand mate.
///
/// `lambda` is the per-sample offset from the displacement convention
/// alpha = mate - lambda eps N_mate. The two-constant relation
/// lambda kappa + mu kappa H = 1 is tested with the offset along the mate
/// normal, lambda_offset = -eps lambda_mean; with eps = -1 the two agree.
struct BertrandReport {
  int epsilon{1};
  std::vector<double> rho;
  std::vector<double> lambda;
  double lambda_mean{0.0};
  double lambda_maxdev{0.0};
  double lambda_offset{0.0};
  double mu_fit{0.0};
  std::vector<double> pair_residual;
  double max_pair_residual{0.0};
  bool is_pair{false};
  std::vector<std::size_t> singular_samples;
  double tolerance{0.0};
};

inline constexpr double kDefaultBertrandTolerance = 1e-6;

BertrandReport check_bertrand(const ApparatusField& mate, int epsilon,
                              double tol = kDefaultBertrandTolerance);

/// Closed-form mate relations, evaluated pointwise.
namespace mate_form {
AlgebraVector tangent(double rho, const AlgebraVector& Tm, const AlgebraVector& Bm);
AlgebraVector normal(int epsilon, const AlgebraVector& Nm);
AlgebraVector binormal(double rho, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Bm);
/// Signed curvature; its sign depends on eps and on the sign of rho - H.
double curvature(const MatePoint& p, int epsilon);
double twist(const MatePoint& p);
/// ds/ds*, the integrand of the arc-length map.
double arclength_rate(const MatePoint& p);
/// ds*/ds from the offset construction, 1 / sqrt((1 + lambda eps kappa)^2 + lambda^2 (tau - tau_G)^2).
double offset_rate(double lambda, int epsilon, double kappa, double twist);
/// Geodesic curvature of the principal-normal image.
double gamma(const MatePoint& p);
}  // namespace mate_form

/// Apparatus of the Bertrand partner rebuilt from the mate through the closed
/// forms, sampled on the mate's grid.
struct MateApparatus {
  ApparatusField source;
  /// Frame, |kappa|, tau and H of the partner on the mate grid.
  ApparatusField derived;
  std::vector<double> kappa_signed;
  std::vector<double> twist;
  std::vector<double> s_of_sstar;
  std::vector<double> rate;  ///< ds/ds*
  std::vector<double> gamma;
  std::vector<bool> singular;
  int epsilon{1};
};

/// Throws Error(PlanarDegenerate) if |H| < 1e-10 anywhere on the mate.
MateApparatus mate_apparatus(const ApparatusField& mate, int epsilon);

struct ArcLengthMap {
  std::vector<double> values;  ///< signed s, zero at the first sample of each piece
  std::vector<double> rate;    ///< ds/ds*
  std::vector<bool> singular;  ///< |rho - H| <= 1e-10 or rho undefined
  std::vector<std::size_t> piece_starts;
};

/// s = integral of H sqrt(1 + rho^2) / (rho - H) ds*, trapezoidal. The map
/// restarts at every sign change of rho - H and after singular samples.
ArcLengthMap arclength_map(const ApparatusField& mate);

struct GammaField {
  std::vector<double> values;
  std::vector<bool> singular;
};

GammaField geodesic_curvature_gamma(const ApparatusField& mate);

}  // namespace lieframe
