#include "lieframe/bertrand.hpp"

#include <cmath>
#include <string>

#include "lieframe/error.hpp"

namespace lieframe {

namespace {

const double kNaN = std::nan("");

void require_epsilon(int epsilon) {
  if (epsilon != 1 && epsilon != -1) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be +1 or -1, got " + std::to_string(epsilon));
  }
}

bool offset_singular(const MateScalars& m, std::size_t i) {
  return m.rho_singular[i] || !(std::fabs(m.rho[i] - m.H[i]) > kSingularThreshold);
}

}  // namespace

MateScalars mate_scalars(const ApparatusField& mate) {
  const std::size_t n = mate.size();
  const double h = mate.grid.spacing();
  MateScalars m;
  m.kappa = mate.kappa;
  m.twist = mate.twist();
  m.H = mate.H;
  const std::size_t k = stride_for_spacing(mate.grid, kDerivativeSpacing);
  m.dkappa = fd::first_derivative(std::span<const double>(m.kappa), h, k);
  m.ddkappa = fd::second_derivative(std::span<const double>(m.kappa), h, k);
  m.dtwist = fd::first_derivative(std::span<const double>(m.twist), h, k);
  m.rho.assign(n, kNaN);
  m.rho_singular.assign(n, false);

  std::size_t interior = 0;
  std::size_t singular = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool flat = !(std::fabs(m.dkappa[i]) > kSingularThreshold);
    if (flat) {
      m.rho_singular[i] = true;
    } else {
      m.rho[i] = m.dtwist[i] / m.dkappa[i];
    }
    if (mate.grid.is_interior(i)) {
      ++interior;
      singular += flat ? 1 : 0;
    }
  }
  if (2 * singular > interior) {
    throw Error(ErrorCode::HelicalDegenerate,
                "kappa' vanishes on " + std::to_string(singular) + " of " + std::to_string(interior) +
                    " interior samples; rho is undefined for constant curvature");
  }
  return m;
}

RhoField rho(const ApparatusField& mate) {
  MateScalars m = mate_scalars(mate);
  return {std::move(m.rho), std::move(m.rho_singular)};
}

double lambda_value(double rho, double kappa, double H, int epsilon) {
  return -static_cast<double>(epsilon) * rho / (kappa * (rho - H));
}

LambdaField lambda_from_rho(const ApparatusField& mate, int epsilon) {
  require_epsilon(epsilon);
  const MateScalars m = mate_scalars(mate);
  LambdaField out{std::vector<double>(m.size(), kNaN), std::vector<bool>(m.size(), false)};
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (offset_singular(m, i)) {
      out.singular[i] = true;
      continue;
    }
    out.values[i] = lambda_value(m.rho[i], m.kappa[i], m.H[i], epsilon);
  }
  return out;
}

BertrandReport check_bertrand(const ApparatusField& mate, int epsilon, double tol) {
  require_epsilon(epsilon);
  const RhoField r = rho(mate);
  const LambdaField lam = lambda_from_rho(mate, epsilon);
  const std::size_t n = mate.size();

  BertrandReport rep;
  rep.epsilon = epsilon;
  rep.tolerance = tol;
  rep.rho = r.values;
  rep.lambda = lam.values;

  std::size_t count = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (lam.singular[i]) rep.singular_samples.push_back(i);
    if (mate.grid.is_interior(i) && !lam.singular[i]) {
      ++count;
      sum += lam.values[i];
    }
  }
  rep.pair_residual.assign(n, kNaN);
  if (count == 0) return rep;

  rep.lambda_mean = sum / static_cast<double>(count);
  for (std::size_t i = 0; i < n; ++i) {
    if (mate.grid.is_interior(i) && !lam.singular[i]) {
      rep.lambda_maxdev = std::fmax(rep.lambda_maxdev, std::fabs(lam.values[i] - rep.lambda_mean));
    }
  }
  rep.lambda_offset = -static_cast<double>(epsilon) * rep.lambda_mean;

  // Least squares for mu in lambda kappa + mu kappa H = 1 with lambda fixed.
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mate.grid.is_interior(i)) continue;
    const double kh = mate.kappa[i] * mate.H[i];
    num += kh * (1.0 - rep.lambda_offset * mate.kappa[i]);
    den += kh * kh;
  }
  rep.mu_fit = den > 0.0 ? num / den : 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    rep.pair_residual[i] =
        rep.lambda_offset * mate.kappa[i] + rep.mu_fit * mate.kappa[i] * mate.H[i] - 1.0;
    if (mate.grid.is_interior(i)) {
      rep.max_pair_residual = std::fmax(rep.max_pair_residual, std::fabs(rep.pair_residual[i]));
    }
  }
  rep.is_pair = rep.lambda_maxdev < tol * (1.0 + std::fabs(rep.lambda_mean)) &&
                rep.max_pair_residual < tol && den > 0.0;
  return rep;
}

namespace mate_form {

AlgebraVector tangent(double rho, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (-1.0 / std::sqrt(1.0 + rho * rho)) * (Tm - rho * Bm);
}

AlgebraVector normal(int epsilon, const AlgebraVector& Nm) { return static_cast<double>(epsilon) * Nm; }

AlgebraVector binormal(double rho, int epsilon, const AlgebraVector& Tm, const AlgebraVector& Bm) {
  return (-static_cast<double>(epsilon) / std::sqrt(1.0 + rho * rho)) * (rho * Tm + Bm);
}

double curvature(const MatePoint& p, int epsilon) {
  return -static_cast<double>(epsilon) * p.kappa * (1.0 + p.H * p.rho) * (p.rho - p.H) /
         (p.H * (1.0 + p.rho * p.rho));
}

double twist(const MatePoint& p) {
  const double d = p.rho - p.H;
  return p.kappa * d * d / (p.H * (1.0 + p.rho * p.rho));
}

double arclength_rate(const MatePoint& p) {
  return p.H * std::sqrt(1.0 + p.rho * p.rho) / (p.rho - p.H);
}

double offset_rate(double lambda, int epsilon, double kappa, double twist) {
  const double a = 1.0 + lambda * static_cast<double>(epsilon) * kappa;
  const double b = lambda * twist;
  return 1.0 / std::sqrt(a * a + b * b);
}

double gamma(const MatePoint& p) {
  return -p.kappa * (p.rho - p.H) / (p.kappa * p.kappa * std::pow(1.0 + p.H * p.H, 1.5));
}

}  // namespace mate_form

MateApparatus mate_apparatus(const ApparatusField& mate, int epsilon) {
  require_epsilon(epsilon);
  const std::size_t n = mate.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::fabs(mate.H[i]) >= kSingularThreshold)) {
      throw Error(ErrorCode::PlanarDegenerate,
                  "mate harmonic curvature vanishes at sample " + std::to_string(i));
    }
  }
  const MateScalars m = mate_scalars(mate);

  MateApparatus out{mate, ApparatusField(mate.grid), {}, {}, {}, {}, {}, {}, epsilon};
  out.kappa_signed.assign(n, kNaN);
  out.twist.assign(n, kNaN);
  out.rate.assign(n, kNaN);
  out.gamma.assign(n, kNaN);
  out.singular.assign(n, false);

  ApparatusField& d = out.derived;
  const AlgebraVector undefined{kNaN, kNaN, kNaN};
  for (std::size_t i = 0; i < n; ++i) {
    d.N[i] = mate_form::normal(epsilon, mate.N[i]);
    d.tauG[i] = mate.tauG[i];
    if (offset_singular(m, i)) {
      out.singular[i] = true;
      d.T[i] = d.B[i] = undefined;
      d.kappa[i] = d.tau[i] = d.H[i] = kNaN;
      continue;
    }
    const MatePoint p = m.at(i);
    d.T[i] = mate_form::tangent(p.rho, mate.T[i], mate.B[i]);
    d.B[i] = mate_form::binormal(p.rho, epsilon, mate.T[i], mate.B[i]);
    out.kappa_signed[i] = mate_form::curvature(p, epsilon);
    out.twist[i] = mate_form::twist(p);
    out.rate[i] = mate_form::arclength_rate(p);
    out.gamma[i] = mate_form::gamma(p);
    d.kappa[i] = std::fabs(out.kappa_signed[i]);
    d.tau[i] = out.twist[i] + d.tauG[i];
    d.H[i] = out.twist[i] / d.kappa[i];
  }
  SigmaField sigma = sigma_function(d, out.rate);
  d.sigma = std::move(sigma.values);
  d.sigma_defined = std::move(sigma.defined);

  ArcLengthMap map = arclength_map(mate);
  out.s_of_sstar = std::move(map.values);
  return out;
}

ArcLengthMap arclength_map(const ApparatusField& mate) {
  const MateScalars m = mate_scalars(mate);
  const std::size_t n = m.size();
  const double h = mate.grid.spacing();
  ArcLengthMap out{std::vector<double>(n, kNaN), std::vector<double>(n, kNaN), std::vector<bool>(n, false), {}};

  for (std::size_t i = 0; i < n; ++i) {
    out.singular[i] = offset_singular(m, i);
    if (!out.singular[i]) out.rate[i] = mate_form::arclength_rate(m.at(i));
  }

  bool open = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.singular[i]) {
      open = false;
      continue;
    }
    const bool sign_change = open && std::signbit(m.rho[i] - m.H[i]) != std::signbit(m.rho[i - 1] - m.H[i - 1]);
    if (!open || sign_change) {
      out.piece_starts.push_back(i);
      out.values[i] = 0.0;
      open = true;
      continue;
    }
    out.values[i] = out.values[i - 1] + 0.5 * h * (out.rate[i - 1] + out.rate[i]);
  }
  return out;
}

GammaField geodesic_curvature_gamma(const ApparatusField& mate) {
  const MateScalars m = mate_scalars(mate);
  GammaField out{std::vector<double>(m.size(), kNaN), m.rho_singular};
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.rho_singular[i]) out.values[i] = mate_form::gamma(m.at(i));
  }
  return out;
}

}  // namespace lieframe
