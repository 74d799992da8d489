#include "lieframe/frenet.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "lieframe/error.hpp"

namespace lieframe {

ApparatusField::ApparatusField(const Grid& g)
    : grid(g),
      T(g.size()),
      N(g.size()),
      B(g.size()),
      kappa(g.size(), 0.0),
      tau(g.size(), 0.0),
      tauG(g.size(), 0.0),
      H(g.size(), 0.0),
      sigma(g.size(), 0.0),
      sigma_defined(g.size(), false) {}

std::vector<double> ApparatusField::twist() const {
  std::vector<double> w(size());
  for (std::size_t i = 0; i < size(); ++i) w[i] = twist(i);
  return w;
}

double harmonic_curvature(double kappa, double tau, double tau_G) {
  if (!(kappa > 0.0)) {
    throw Error(ErrorCode::NonPositiveCurvature, "harmonic curvature needs kappa > 0");
  }
  return (tau - tau_G) / kappa;
}

namespace {

std::string describe_point(double s) {
  std::ostringstream os;
  os.precision(17);
  os << s;
  return os.str();
}

double evaluate(const ScalarFunction& f, double s, const char* name) {
  double v = 0.0;
  try {
    v = f(s);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainError) {
      throw Error(ErrorCode::ExpressionDomainError,
                  std::string(name) + " undefined at s=" + describe_point(s) + ": " + e.what());
    }
    throw;
  }
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::ExpressionDomainError,
                std::string(name) + " is not finite at s=" + describe_point(s));
  }
  return v;
}

double evaluate_curvature(const ScalarFunction& f, double s) {
  const double k = evaluate(f, s, "kappa");
  if (!(k > kCurvatureFloor)) {
    throw Error(ErrorCode::NonPositiveCurvature,
                "kappa must be positive, got " + describe_point(k) + " at s=" + describe_point(s));
  }
  return k;
}

struct FrameRate {
  AlgebraVector dT, dN, dB;
};

FrameRate frenet_rate(const Frame& f, double kappa, double twist) {
  return {kappa * f.N, -kappa * f.T + twist * f.B, -twist * f.N};
}

Frame advance(const Frame& f, const FrameRate& r, double dt) {
  return {f.T + dt * r.dT, f.N + dt * r.dN, f.B + dt * r.dB};
}

// Gram-Schmidt onto SO(3): T normalized, N orthogonalized against T, B = T x N.
Frame project_to_rotation(const Frame& f) {
  Frame out;
  out.T = normalized(f.T);
  out.N = normalized(f.N - inner(f.N, out.T) * out.T);
  out.B = cross(out.T, out.N);
  return out;
}

}  // namespace

ApparatusField integrate_frenet(const CurveSpec& spec) {
  const Frame& f0 = spec.initial_frame;
  if (orthonormality_defect(f0.T, f0.N, f0.B) > kFrameTolerance ||
      inner(cross(f0.T, f0.N), f0.B) <= 0.0) {
    throw Error(ErrorCode::FrameNotOrthonormal, "initial frame must be orthonormal and right-handed");
  }

  const Grid& grid = spec.grid;
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double tau_G = spec.structure.tau_G;

  ApparatusField app(grid);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = grid.at(i);
    app.kappa[i] = evaluate_curvature(spec.kappa, s);
    app.tau[i] = evaluate(spec.tau, s, "tau");
    app.tauG[i] = tau_G;
  }

  Frame frame = f0;
  app.T[0] = frame.T;
  app.N[0] = frame.N;
  app.B[0] = frame.B;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double s = grid.at(i);
    const double sm = s + 0.5 * h;
    const double k_mid = evaluate_curvature(spec.kappa, sm);
    const double w_mid = evaluate(spec.tau, sm, "tau") - tau_G;
    const double k0 = app.kappa[i];
    const double w0 = app.tau[i] - tau_G;
    const double k1 = app.kappa[i + 1];
    const double w1 = app.tau[i + 1] - tau_G;

    const FrameRate r1 = frenet_rate(frame, k0, w0);
    const FrameRate r2 = frenet_rate(advance(frame, r1, 0.5 * h), k_mid, w_mid);
    const FrameRate r3 = frenet_rate(advance(frame, r2, 0.5 * h), k_mid, w_mid);
    const FrameRate r4 = frenet_rate(advance(frame, r3, h), k1, w1);
    const double c = h / 6.0;
    frame.T += c * (r1.dT + 2.0 * r2.dT + 2.0 * r3.dT + r4.dT);
    frame.N += c * (r1.dN + 2.0 * r2.dN + 2.0 * r3.dN + r4.dN);
    frame.B += c * (r1.dB + 2.0 * r2.dB + 2.0 * r3.dB + r4.dB);
    frame = project_to_rotation(frame);

    app.T[i + 1] = frame.T;
    app.N[i + 1] = frame.N;
    app.B[i + 1] = frame.B;
  }

  for (std::size_t i = 0; i < n; ++i) {
    app.H[i] = harmonic_curvature(app.kappa[i], app.tau[i], app.tauG[i]);
  }
  SigmaField sigma = sigma_function(app);
  app.sigma = std::move(sigma.values);
  app.sigma_defined = std::move(sigma.defined);
  return app;
}

TangentFrame frame_from_tangent(std::span<const AlgebraVector> tangent, const Grid& grid,
                                std::span<const double> speed, const LieStructure& lie, std::size_t stride) {
  const std::size_t n = grid.size();
  if (tangent.size() != n || speed.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "tangent and speed samples must match the grid");
  }
  const double nan = std::nan("");
  const double h = grid.spacing();

  TangentFrame out{ApparatusField(grid), std::vector<bool>(n, true)};
  ApparatusField& app = out.field;
  for (std::size_t i = 0; i < n; ++i) {
    const double len = norm(tangent[i]);
    if (!std::isfinite(len)) {
      out.defined[i] = false;
      app.T[i] = tangent[i];
      continue;
    }
    if (!(std::fabs(len - 1.0) < 1e-6)) {
      throw Error(ErrorCode::TangentNotUnit,
                  "tangent sample " + std::to_string(i) + " has norm " + describe_point(len));
    }
    app.T[i] = tangent[i] / len;
  }

  const std::vector<AlgebraVector> dT = fd::first_derivative(std::span<const AlgebraVector>(app.T), h, stride);
  const AlgebraVector undefined{nan, nan, nan};
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraVector rate = dT[i] / speed[i];
    const double k = norm(rate);
    if (!std::isfinite(k) || k < kDerivativeFloor) {
      out.defined[i] = false;
      app.kappa[i] = std::isfinite(k) ? k : nan;
      app.N[i] = undefined;
      app.B[i] = undefined;
      continue;
    }
    app.kappa[i] = k;
    app.N[i] = normalized(rate - inner(rate, app.T[i]) * app.T[i]);
    app.B[i] = cross(app.T[i], app.N[i]);
  }

  // <N', B> = <T'', B> / kappa, so the twist needs no difference of N; in the
  // grid parameter u, <T_uu, B> = speed^2 <T'', B>.
  const std::vector<AlgebraVector> ddT = fd::second_derivative(std::span<const AlgebraVector>(app.T), h, stride);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = inner(ddT[i], app.B[i]) / (speed[i] * speed[i] * app.kappa[i]);
    if (!out.defined[i] || !std::isfinite(w)) {
      out.defined[i] = false;
      app.tau[i] = app.tauG[i] = app.H[i] = nan;
      continue;
    }
    app.tauG[i] = tauG_from_frame(app.T[i], app.N[i], app.B[i], lie);
    app.tau[i] = w + app.tauG[i];
    app.H[i] = w / app.kappa[i];
  }

  SigmaField sigma = sigma_function(app, speed, stride);
  app.sigma = std::move(sigma.values);
  app.sigma_defined = std::move(sigma.defined);
  return out;
}

ApparatusField apparatus_from_tangent(std::span<const AlgebraVector> tangent, const Grid& grid,
                                      const LieStructure& lie) {
  const std::vector<double> unit(grid.size(), 1.0);
  TangentFrame tf = frame_from_tangent(tangent, grid, unit, lie);
  for (std::size_t i = 0; i < tf.defined.size(); ++i) {
    if (!tf.defined[i]) {
      throw Error(ErrorCode::NonPositiveCurvature,
                  "|dT/ds| vanishes at sample " + std::to_string(i) + "; principal normal undefined");
    }
  }
  return std::move(tf.field);
}

SigmaField sigma_function(const ApparatusField& app, std::span<const double> speed, std::size_t stride) {
  const std::size_t n = app.size();
  const std::vector<double> dH = fd::first_derivative(std::span<const double>(app.H), app.grid.spacing(), stride);
  SigmaField out{std::vector<double>(n, std::nan("")), std::vector<bool>(n, false)};
  for (std::size_t i = 0; i < n; ++i) {
    const double rate = dH[i] / speed[i];
    if (!std::isfinite(rate) || !(std::fabs(rate) > kDerivativeFloor)) continue;
    const double value = app.kappa[i] * std::pow(1.0 + app.H[i] * app.H[i], 1.5) / rate;
    if (!std::isfinite(value)) continue;
    out.values[i] = value;
    out.defined[i] = true;
  }
  return out;
}

SigmaField sigma_function(const ApparatusField& app) {
  const std::vector<double> unit(app.size(), 1.0);
  return sigma_function(app, unit);
}

HelixClass classify(const ApparatusField& app, double tol) {
  const std::size_t n = app.size();
  std::size_t interior = 0;
  double sum_h = 0.0;
  double max_twist = 0.0;
  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!app.grid.is_interior(i)) continue;
    ++interior;
    sum_h += app.H[i];
    const double w = std::fabs(app.twist(i));
    finite = finite && std::isfinite(app.H[i]) && std::isfinite(w);
    max_twist = std::fmax(max_twist, w);
  }

  HelixClass out;
  if (!finite || interior == 0) return out;
  out.planar = max_twist < tol;

  const double mean_h = sum_h / static_cast<double>(interior);
  double max_dev_h = 0.0;
  std::size_t n_sigma = 0;
  double sum_sigma = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!app.grid.is_interior(i)) continue;
    max_dev_h = std::fmax(max_dev_h, std::fabs(app.H[i] - mean_h));
    if (app.sigma_defined[i]) {
      ++n_sigma;
      sum_sigma += app.sigma[i];
    }
  }
  out.general_helix = max_dev_h < tol;

  if (n_sigma > 0 && 10 * n_sigma >= 9 * interior) {
    const double mean_sigma = sum_sigma / static_cast<double>(n_sigma);
    double max_dev_sigma = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (app.grid.is_interior(i) && app.sigma_defined[i]) {
        max_dev_sigma = std::fmax(max_dev_sigma, std::fabs(app.sigma[i] - mean_sigma));
      }
    }
    out.slant_helix = max_dev_sigma < tol * (1.0 + std::fabs(mean_sigma));
  }
  return out;
}

}  // namespace lieframe
