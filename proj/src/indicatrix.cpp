#include "lieframe/indicatrix.hpp"

#include <cmath>
#include <string>

#include "lieframe/error.hpp"

namespace lieframe {

std::string_view indicatrix_name(IndicatrixKind kind) {
  switch (kind) {
    case IndicatrixKind::Tangent: return "tangent";
    case IndicatrixKind::Normal: return "normal";
    case IndicatrixKind::Binormal: return "binormal";
  }
  return "unknown";
}

IndicatrixKind parse_indicatrix_kind(std::string_view text) {
  if (text == "t" || text == "tangent") return IndicatrixKind::Tangent;
  if (text == "n" || text == "normal") return IndicatrixKind::Normal;
  if (text == "b" || text == "binormal") return IndicatrixKind::Binormal;
  throw Error(ErrorCode::InvalidArgument, "unknown indicatrix kind '" + std::string(text) + "' (expected t, n or b)");
}

namespace indicatrix_form {

namespace {
double sq(double x) { return x * x; }
double eps_d(int epsilon) { return static_cast<double>(epsilon); }
// kappa'^2 (H - rho)^2 + kappa^4 (1 + H^2)^3
double normal_q(const MatePoint& p) {
  return sq(p.dkappa) * sq(p.H - p.rho) + sq(sq(p.kappa)) * std::pow(1.0 + sq(p.H), 3.0);
}
}  // namespace

AlgebraVector tangent_curve(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (-1.0 / std::sqrt(1.0 + sq(p.rho))) * (Tm - p.rho * Bm);
}

AlgebraVector tangent_T(const AlgebraVector& Nm) { return -Nm; }

AlgebraVector tangent_N(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (1.0 / std::sqrt(1.0 + sq(p.H))) * (Tm - p.H * Bm);
}

AlgebraVector tangent_B(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (1.0 / std::sqrt(1.0 + sq(p.H))) * (p.H * Tm + Bm);
}

double tangent_arclength_integrand(const MatePoint& p) {
  return -p.kappa * sq(p.rho - p.H) / (p.H * sq(1.0 + p.rho));
}

double tangent_kappa(const MatePoint& p) {
  return std::sqrt(1.0 + sq(p.rho)) * std::sqrt(1.0 + sq(p.H)) / (p.H - p.rho);
}

double tangent_twist(const MatePoint& p) {
  return -p.dkappa * std::sqrt(1.0 + sq(p.rho)) / (sq(p.kappa) * (1.0 + sq(p.H)));
}

AlgebraVector normal_curve(int epsilon, const AlgebraVector& Nm) { return eps_d(epsilon) * Nm; }

AlgebraVector normal_T(const MatePoint& p, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (-eps_d(epsilon) / std::sqrt(1.0 + sq(p.H))) * (Tm - p.H * Bm);
}

AlgebraVector normal_N(const MatePoint& p, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Nm,
                       const AlgebraVector& Bm) {
  const AlgebraVector v = (p.H * p.dkappa * (p.rho - p.H)) * Tm - (sq(p.kappa) * sq(1.0 + sq(p.H))) * Nm -
                          (p.dkappa * (p.H - p.rho)) * Bm;
  return (-eps_d(epsilon) / (std::sqrt(normal_q(p)) * std::sqrt(1.0 + sq(p.H)))) * v;
}

AlgebraVector normal_B(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Nm,
                       const AlgebraVector& Bm) {
  const double k2 = sq(p.kappa) * (1.0 + sq(p.H));
  const AlgebraVector v = (k2 * p.H) * Tm + (p.dkappa * (p.rho - p.H)) * Nm + k2 * Bm;
  return (1.0 / std::sqrt(normal_q(p))) * v;
}

double normal_arclength_integrand(const MatePoint& p) {
  return p.kappa * (p.rho - p.H) * std::sqrt(1.0 + sq(p.H)) / (p.H * std::sqrt(1.0 + sq(p.rho)));
}

double normal_kappa(const MatePoint& p) {
  return std::sqrt(normal_q(p)) / (sq(p.kappa) * std::pow(1.0 + sq(p.H), 1.5));
}

double normal_twist(const MatePoint& p, int epsilon) {
  return eps_d(epsilon) * (p.H - p.rho) * normal_planarity_residual(p) / normal_q(p);
}

AlgebraVector binormal_curve(const MatePoint& p, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (-eps_d(epsilon) / std::sqrt(1.0 + sq(p.rho))) * (p.rho * Tm + Bm);
}

AlgebraVector binormal_T(int epsilon, const AlgebraVector& Nm) { return eps_d(epsilon) * Nm; }

AlgebraVector binormal_N(const MatePoint& p, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (-eps_d(epsilon) / std::sqrt(1.0 + sq(p.H))) * (Tm - p.H * Bm);
}

AlgebraVector binormal_B(const MatePoint& p, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (1.0 / std::sqrt(1.0 + sq(p.H))) * (p.H * Tm + Bm);
}

double binormal_arclength_integrand(const MatePoint& p) {
  return -p.kappa * sq(p.rho - p.H) / (p.H * (1.0 + sq(p.rho)));
}

double binormal_kappa(const MatePoint& p) {
  return std::sqrt((1.0 + sq(p.H)) * (1.0 + sq(p.rho))) / (p.rho - p.H);
}

double binormal_twist(const MatePoint& p, int epsilon) {
  return eps_d(epsilon) * p.dkappa * std::sqrt(1.0 + sq(p.rho)) / (sq(p.kappa) * (1.0 + sq(p.H)));
}

double spherical_helix_residual(const MatePoint& p) {
  return p.ddkappa * p.kappa * (1.0 + sq(p.H)) - 3.0 * sq(p.dkappa) * (1.0 + p.rho * p.H);
}

double normal_planarity_residual(const MatePoint& p) {
  return (3.0 * sq(p.dkappa) - p.ddkappa * p.kappa) * (1.0 + sq(p.rho)) -
         3.0 * sq(p.dkappa) * p.rho * (p.H - p.rho);
}

double sstar_per_indicatrix_arclength(const MatePoint& p) {
  return std::sqrt(1.0 + sq(p.rho)) / (p.kappa * (p.H - p.rho));
}

double principal_image_gamma(const MatePoint& p) {
  if (!(std::fabs(p.H - p.rho) > kSingularThreshold)) return 0.0;
  const double k3 = p.kappa * p.kappa * p.kappa;
  const double num = -k3 * std::pow(1.0 + sq(p.H), 1.5) * sq(p.rho - p.H) * spherical_helix_residual(p);
  const double den = std::sqrt(1.0 + sq(p.rho)) *
                     std::pow(p.kappa * std::pow(1.0 + sq(p.H), 3.0) + sq(p.dkappa) * sq(p.H - p.rho), 1.5);
  return num / den * sstar_per_indicatrix_arclength(p);
}

}  // namespace indicatrix_form

namespace {

const double kNaN = std::nan("");

void require_nonplanar(const ApparatusField& mate) {
  for (std::size_t i = 0; i < mate.size(); ++i) {
    if (!(std::fabs(mate.H[i]) >= kSingularThreshold)) {
      throw Error(ErrorCode::PlanarDegenerate,
                  "mate harmonic curvature vanishes at sample " + std::to_string(i));
    }
  }
}

void require_epsilon(int epsilon) {
  if (epsilon != 1 && epsilon != -1) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be +1 or -1, got " + std::to_string(epsilon));
  }
}

bool offset_singular(const MateScalars& m, std::size_t i) {
  return m.rho_singular[i] || !(std::fabs(m.rho[i] - m.H[i]) > kSingularThreshold);
}

// Fills s_signed / s from s_rate; intervals touching a singular sample add nothing.
void accumulate_arclength(IndicatrixApparatus& ind) {
  const std::size_t n = ind.size();
  const double h = ind.grid.spacing();
  ind.s_signed.assign(n, 0.0);
  ind.s.assign(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    double ds_signed = 0.0;
    double ds = 0.0;
    if (!ind.singular[i - 1] && !ind.singular[i]) {
      ds_signed = 0.5 * h * (ind.s_rate[i - 1] + ind.s_rate[i]);
      ds = 0.5 * h * (std::fabs(ind.s_rate[i - 1]) + std::fabs(ind.s_rate[i]));
    }
    ind.s_signed[i] = ind.s_signed[i - 1] + ds_signed;
    ind.s[i] = ind.s[i - 1] + ds;
  }
}

IndicatrixApparatus build(const ApparatusField& mate, IndicatrixKind kind, int epsilon) {
  require_epsilon(epsilon);
  require_nonplanar(mate);
  const MateScalars m = mate_scalars(mate);
  const std::size_t n = mate.size();
  namespace f = indicatrix_form;

  IndicatrixApparatus ind(mate.grid);
  ind.kind = kind;
  ind.epsilon = epsilon;
  ind.curve.resize(n);
  ind.T.resize(n);
  ind.N.resize(n);
  ind.B.resize(n);
  ind.kappa.assign(n, kNaN);
  ind.twist.assign(n, kNaN);
  ind.s_rate.assign(n, kNaN);
  ind.singular.assign(n, false);
  if (kind != IndicatrixKind::Normal) ind.gamma.assign(n, kNaN);

  const AlgebraVector undefined{kNaN, kNaN, kNaN};
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraVector& Tm = mate.T[i];
    const AlgebraVector& Nm = mate.N[i];
    const AlgebraVector& Bm = mate.B[i];
    ind.singular[i] = offset_singular(m, i);
    if (ind.singular[i]) {
      // Only the pieces that do not involve rho survive.
      ind.curve[i] = kind == IndicatrixKind::Normal ? f::normal_curve(epsilon, Nm) : undefined;
      ind.T[i] = kind == IndicatrixKind::Tangent  ? f::tangent_T(Nm)
                 : kind == IndicatrixKind::Binormal ? f::binormal_T(epsilon, Nm)
                                                    : undefined;
      ind.N[i] = ind.B[i] = undefined;
      continue;
    }
    const MatePoint p = m.at(i);
    const double ds_dsstar = mate_form::arclength_rate(p);
    switch (kind) {
      case IndicatrixKind::Tangent:
        ind.curve[i] = f::tangent_curve(p, Tm, Bm);
        ind.T[i] = f::tangent_T(Nm);
        ind.N[i] = f::tangent_N(p, Tm, Bm);
        ind.B[i] = f::tangent_B(p, Tm, Bm);
        ind.kappa[i] = f::tangent_kappa(p);
        ind.twist[i] = f::tangent_twist(p);
        ind.s_rate[i] = f::tangent_arclength_integrand(p) * ds_dsstar;
        ind.gamma[i] = f::principal_image_gamma(p);
        break;
      case IndicatrixKind::Normal:
        ind.curve[i] = f::normal_curve(epsilon, Nm);
        ind.T[i] = f::normal_T(p, epsilon, Tm, Bm);
        ind.N[i] = f::normal_N(p, epsilon, Tm, Nm, Bm);
        ind.B[i] = f::normal_B(p, Tm, Nm, Bm);
        ind.kappa[i] = f::normal_kappa(p);
        ind.twist[i] = f::normal_twist(p, epsilon);
        ind.s_rate[i] = f::normal_arclength_integrand(p) * ds_dsstar;
        break;
      case IndicatrixKind::Binormal:
        ind.curve[i] = f::binormal_curve(p, epsilon, Tm, Bm);
        ind.T[i] = f::binormal_T(epsilon, Nm);
        ind.N[i] = f::binormal_N(p, epsilon, Tm, Bm);
        ind.B[i] = f::binormal_B(p, Tm, Bm);
        ind.kappa[i] = f::binormal_kappa(p);
        ind.twist[i] = f::binormal_twist(p, epsilon);
        ind.s_rate[i] = f::binormal_arclength_integrand(p) * ds_dsstar;
        ind.gamma[i] = f::principal_image_gamma(p);
        break;
    }
  }
  accumulate_arclength(ind);
  return ind;
}

GammaField principal_image_gamma_field(const ApparatusField& mate) {
  const MateScalars m = mate_scalars(mate);
  GammaField out{std::vector<double>(m.size(), kNaN), std::vector<bool>(m.size(), false)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.singular[i] = offset_singular(m, i);
    if (!m.rho_singular[i]) out.values[i] = indicatrix_form::principal_image_gamma(m.at(i));
  }
  return out;
}

std::vector<double> residual_field(const ApparatusField& mate, double (*form)(const MatePoint&)) {
  const MateScalars m = mate_scalars(mate);
  std::vector<double> out(m.size(), kNaN);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.rho_singular[i]) out[i] = form(m.at(i));
  }
  return out;
}

}  // namespace

IndicatrixApparatus tangent_indicatrix(const ApparatusField& mate, int epsilon) {
  return build(mate, IndicatrixKind::Tangent, epsilon);
}

IndicatrixApparatus normal_indicatrix(const ApparatusField& mate, int epsilon) {
  return build(mate, IndicatrixKind::Normal, epsilon);
}

IndicatrixApparatus binormal_indicatrix(const ApparatusField& mate, int epsilon) {
  return build(mate, IndicatrixKind::Binormal, epsilon);
}

IndicatrixApparatus indicatrix(const ApparatusField& mate, IndicatrixKind kind, int epsilon) {
  return build(mate, kind, epsilon);
}

std::vector<double> tangent_spherical_helix_residual(const ApparatusField& mate) {
  return residual_field(mate, &indicatrix_form::spherical_helix_residual);
}

std::vector<double> normal_planarity_residual(const ApparatusField& mate) {
  return residual_field(mate, &indicatrix_form::normal_planarity_residual);
}

GammaField gamma_tangent(const ApparatusField& mate) { return principal_image_gamma_field(mate); }

GammaField gamma_binormal(const ApparatusField& mate) { return principal_image_gamma_field(mate); }

}  // namespace lieframe
