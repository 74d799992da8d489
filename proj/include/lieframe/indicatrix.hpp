#pragma once

#include <string_view>
#include <vector>

#include "lieframe/bertrand.hpp"

namespace lieframe {

enum class IndicatrixKind { Tangent, Normal, Binormal };

std::string_view indicatrix_name(IndicatrixKind kind);
/// Accepts "t", "n", "b" or the full names. Throws Error(InvalidArgument).
IndicatrixKind parse_indicatrix_kind(std::string_view text);

/// Closed-form apparatus of one spherical indicatrix of a Bertrand curve,
/// sampled on the grid of its mate.
struct IndicatrixApparatus {
  IndicatrixKind kind{IndicatrixKind::Tangent};
  Grid grid;
  int epsilon{1};
  std::vector<AlgebraVector> curve;  ///< points on the unit sphere of the algebra
  std::vector<AlgebraVector> T, N, B;
  std::vector<double> kappa;
  std::vector<double> twist;  ///< (tau - tau_G) of the indicatrix
  /// d s_ind / d s*: the printed arc-length integrand times ds/ds*.
  std::vector<double> s_rate;
  std::vector<double> s_signed;
  std::vector<double> s;  ///< cumulative integral of |s_rate|
  /// Geodesic curvature of the principal image; empty for the normal indicatrix.
  std::vector<double> gamma;
  std::vector<bool> singular;

  explicit IndicatrixApparatus(const Grid& g) : grid(g) {}
  std::size_t size() const { return grid.size(); }
};

/// Pointwise closed forms. Vectors take the mate frame (Tm, Nm, Bm).
namespace indicatrix_form {

// tangent indicatrix
AlgebraVector tangent_curve(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Bm);
AlgebraVector tangent_T(const AlgebraVector& Nm);
AlgebraVector tangent_N(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Bm);
AlgebraVector tangent_B(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Bm);
double tangent_arclength_integrand(const MatePoint& p);
double tangent_kappa(const MatePoint& p);
double tangent_twist(const MatePoint& p);

// principal normal indicatrix
AlgebraVector normal_curve(int epsilon, const AlgebraVector& Nm);
AlgebraVector normal_T(const MatePoint& p, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Bm);
AlgebraVector normal_N(const MatePoint& p, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Nm,
                       const AlgebraVector& Bm);
AlgebraVector normal_B(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Nm,
                       const AlgebraVector& Bm);
double normal_arclength_integrand(const MatePoint& p);
double normal_kappa(const MatePoint& p);
double normal_twist(const MatePoint& p, int epsilon);

// binormal indicatrix
AlgebraVector binormal_curve(const MatePoint& p, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Bm);
AlgebraVector binormal_T(int epsilon, const AlgebraVector& Nm);
AlgebraVector binormal_N(const MatePoint& p, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Bm);
AlgebraVector binormal_B(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Bm);
double binormal_arclength_integrand(const MatePoint& p);
double binormal_kappa(const MatePoint& p);
double binormal_twist(const MatePoint& p, int epsilon);

/// kappa'' kappa (1 + H^2) - 3 kappa'^2 (1 + rho H); zero iff the tangent
/// indicatrix is a spherical helix.
double spherical_helix_residual(const MatePoint& p);
/// (3 kappa'^2 - kappa'' kappa)(1 + rho^2) - 3 kappa'^2 rho (H - rho).
double normal_planarity_residual(const MatePoint& p);

/// d s* / d s_t as printed for the tangent and binormal images.
double sstar_per_indicatrix_arclength(const MatePoint& p);

/// Geodesic curvature of the principal image of the tangent (and binormal)
/// indicatrix. Returns 0 when |H - rho| <= 1e-10, where the printed
/// expression has a removable 0 * inf.
double principal_image_gamma(const MatePoint& p);

}  // namespace indicatrix_form

IndicatrixApparatus tangent_indicatrix(const ApparatusField& mate, int epsilon);
IndicatrixApparatus normal_indicatrix(const ApparatusField& mate, int epsilon);
IndicatrixApparatus binormal_indicatrix(const ApparatusField& mate, int epsilon);
IndicatrixApparatus indicatrix(const ApparatusField& mate, IndicatrixKind kind, int epsilon);

/// Per-sample spherical-helix residual of the tangent indicatrix (NaN where rho is undefined).
std::vector<double> tangent_spherical_helix_residual(const ApparatusField& mate);
/// Per-sample planarity residual of the principal normal indicatrix.
std::vector<double> normal_planarity_residual(const ApparatusField& mate);

GammaField gamma_tangent(const ApparatusField& mate);
GammaField gamma_binormal(const ApparatusField& mate);

}  // namespace lieframe
