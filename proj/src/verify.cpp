#include "lieframe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "lieframe/error.hpp"

namespace lieframe {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Degenerate: return "degenerate";
  }
  return "unknown";
}

std::string_view compare_mode_name(CompareMode m) {
  switch (m) {
    case CompareMode::Signed: return "signed";
    case CompareMode::SignAligned: return "sign_aligned";
    case CompareMode::Magnitude: return "magnitude";
  }
  return "unknown";
}

namespace {

const double kNaN = std::nan("");

double distance(double a, double b) { return std::fabs(a - b); }
double distance(const AlgebraVector& a, const AlgebraVector& b) { return norm(a - b); }
double magnitude(double a) { return std::fabs(a); }
double magnitude(const AlgebraVector& a) { return norm(a); }
bool finite(double a) { return std::isfinite(a); }
bool finite(const AlgebraVector& a) { return std::isfinite(a.x1) && std::isfinite(a.x2) && std::isfinite(a.x3); }

template <typename V>
double residual(const V& a, const V& b, CompareMode mode, int sign) {
  switch (mode) {
    case CompareMode::Magnitude: return std::fabs(magnitude(a) - magnitude(b));
    case CompareMode::SignAligned: return distance(a, static_cast<double>(sign) * b);
    case CompareMode::Signed: break;
  }
  return distance(a, b);
}

template <typename V>
ResidualReport compare_impl(std::span<const V> closed, std::span<const V> numeric, std::string id, double tol,
                            const CompareOptions& opt) {
  const std::size_t n = closed.size();
  if (numeric.size() != n || (!opt.flagged.empty() && opt.flagged.size() != n)) {
    throw Error(ErrorCode::ShapeMismatch, "compare '" + id + "': sample counts differ (" + std::to_string(n) +
                                              " vs " + std::to_string(numeric.size()) + ")");
  }
  ResidualReport rep;
  rep.id = std::move(id);
  rep.tolerance = tol;
  rep.mode = opt.mode;

  std::vector<std::size_t> included;
  included.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < opt.band || i + opt.band >= n) continue;
    const bool skip = (!opt.flagged.empty() && opt.flagged[i]) || !finite(closed[i]) || !finite(numeric[i]);
    if (skip) {
      ++rep.n_flagged;
    } else {
      included.push_back(i);
    }
  }
  rep.n_compared = included.size();
  if (included.empty()) {
    rep.verdict = Verdict::Degenerate;
    return rep;
  }

  if (opt.mode == CompareMode::SignAligned) {
    double max_plus = 0.0, max_minus = 0.0, sum_plus = 0.0, sum_minus = 0.0;
    for (std::size_t i : included) {
      const double rp = residual(closed[i], numeric[i], CompareMode::SignAligned, 1);
      const double rm = residual(closed[i], numeric[i], CompareMode::SignAligned, -1);
      max_plus = std::fmax(max_plus, rp);
      max_minus = std::fmax(max_minus, rm);
      sum_plus += rp;
      sum_minus += rm;
    }
    rep.sign = (max_minus < max_plus || (max_minus == max_plus && sum_minus < sum_plus)) ? -1 : 1;
  }

  std::vector<double> r(included.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < included.size(); ++k) {
    const std::size_t i = included[k];
    r[k] = residual(closed[i], numeric[i], opt.mode, rep.sign);
    sum += r[k];
    if (r[k] > rep.max_abs || k == 0) {
      rep.max_abs = r[k];
      rep.worst_index = i;
    }
  }
  rep.mean_abs = sum / static_cast<double>(r.size());
  const std::size_t q = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(r.size()))) - 1;
  std::nth_element(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(q), r.end());
  rep.quantile95 = r[q];
  rep.verdict = rep.max_abs < tol ? Verdict::Pass : Verdict::Fail;
  return rep;
}

double unit_step(double d) { return d < 0.0 ? -1.0 : 1.0; }

double push_away(double a, double b, CompareMode mode, int sign, double delta) {
  if (mode == CompareMode::Magnitude) {
    const double grow = std::fabs(a) >= std::fabs(b) ? 1.0 : -1.0;
    return a + delta * grow * unit_step(a);
  }
  const double target = mode == CompareMode::SignAligned ? static_cast<double>(sign) * b : b;
  return a + delta * unit_step(a - target);
}

AlgebraVector push_away(const AlgebraVector& a, const AlgebraVector& b, CompareMode mode, int sign, double delta) {
  AlgebraVector dir;
  if (mode == CompareMode::Magnitude) {
    const double len = norm(a);
    dir = len > 0.0 ? a / len : AlgebraVector{1.0, 0.0, 0.0};
    if (len < norm(b)) dir = -dir;
  } else {
    const AlgebraVector target = mode == CompareMode::SignAligned ? static_cast<double>(sign) * b : b;
    const AlgebraVector d = a - target;
    const double len = norm(d);
    dir = len > 0.0 ? d / len : AlgebraVector{1.0, 0.0, 0.0};
  }
  return a + delta * dir;
}

template <typename V>
bool negative_control_impl(std::span<const V> closed, std::span<const V> numeric, double tol,
                           const CompareOptions& opt, double delta) {
  const ResidualReport base = compare_impl(closed, numeric, "negative-control", tol, opt);
  std::vector<V> perturbed(closed.begin(), closed.end());
  for (std::size_t i = 0; i < perturbed.size(); ++i) {
    if (finite(closed[i]) && finite(numeric[i])) {
      perturbed[i] = push_away(closed[i], numeric[i], opt.mode, base.sign, delta);
    }
  }
  const ResidualReport after =
      compare_impl(std::span<const V>(perturbed), numeric, "negative-control", tol, opt);
  return after.verdict == Verdict::Fail;
}

}  // namespace

ResidualReport compare(std::span<const double> closed, std::span<const double> numeric, std::string id,
                       double tol, const CompareOptions& options) {
  return compare_impl(closed, numeric, std::move(id), tol, options);
}

ResidualReport compare(std::span<const AlgebraVector> closed, std::span<const AlgebraVector> numeric,
                       std::string id, double tol, const CompareOptions& options) {
  return compare_impl(closed, numeric, std::move(id), tol, options);
}

bool negative_control_flips(std::span<const double> closed, std::span<const double> numeric, double tol,
                            const CompareOptions& options, double delta) {
  return negative_control_impl(closed, numeric, tol, options, delta);
}

bool negative_control_flips(std::span<const AlgebraVector> closed, std::span<const AlgebraVector> numeric,
                            double tol, const CompareOptions& options, double delta) {
  return negative_control_impl(closed, numeric, tol, options, delta);
}

std::size_t oracle_stride(const Grid& grid) { return stride_for_spacing(grid, kOracleSpacing); }

OracleApparatus oracle_apparatus(std::span<const AlgebraVector> samples, const Grid& grid,
                                 const LieStructure& lie, std::size_t stride) {
  const std::size_t n = grid.size();
  if (samples.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "oracle samples must match the grid");
  }
  const std::vector<AlgebraVector> dx = fd::first_derivative(samples, grid.spacing(), stride);
  std::vector<double> speed(n);
  std::vector<AlgebraVector> tangent(n);
  for (std::size_t i = 0; i < n; ++i) {
    speed[i] = norm(dx[i]);
    if (std::isfinite(speed[i]) && speed[i] > 1e-12) {
      tangent[i] = dx[i] / speed[i];
    } else {
      tangent[i] = AlgebraVector{kNaN, kNaN, kNaN};
      speed[i] = kNaN;
    }
  }
  std::vector<double> finite_speed(n);
  for (std::size_t i = 0; i < n; ++i) finite_speed[i] = std::isfinite(speed[i]) ? speed[i] : 0.0;
  std::vector<double> length = cumulative_trapezoid(finite_speed, grid.spacing());
  if (!(length.back() >= 1e-8)) {
    throw Error(ErrorCode::DegenerateCurve, "sampled curve has (near) zero length");
  }
  TangentFrame tf = frame_from_tangent(tangent, grid, speed, lie, stride);
  return {std::move(tf.field), std::move(speed), std::move(length), std::move(tf.defined)};
}

GammaField numeric_geodesic_curvature(std::span<const AlgebraVector> samples, const Grid& grid,
                                      std::size_t stride) {
  const std::size_t n = grid.size();
  if (samples.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "geodesic curvature samples must match the grid");
  }
  const std::vector<AlgebraVector> d1 = fd::first_derivative(samples, grid.spacing(), stride);
  const std::vector<AlgebraVector> d2 = fd::second_derivative(samples, grid.spacing(), stride);
  GammaField out{std::vector<double>(n, kNaN), std::vector<bool>(n, false)};
  for (std::size_t i = 0; i < n; ++i) {
    const double v = norm(d1[i]);
    const double k = inner(d2[i], cross(samples[i], d1[i])) / (v * v * v);
    if (!std::isfinite(k) || !(v > 1e-12)) {
      out.singular[i] = true;
      continue;
    }
    out.values[i] = k;
  }
  return out;
}

std::array<ResidualReport, 3> verify_frame_odes(const ApparatusField& app, double tol) {
  const double h = app.grid.spacing();
  const std::vector<AlgebraVector> dT = fd::first_derivative(app.T, h);
  const std::vector<AlgebraVector> dN = fd::first_derivative(app.N, h);
  const std::vector<AlgebraVector> dB = fd::first_derivative(app.B, h);
  const std::size_t n = app.size();
  std::vector<AlgebraVector> rT(n), rN(n), rB(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = app.twist(i);
    rT[i] = dT[i] - app.kappa[i] * app.N[i];
    rN[i] = dN[i] + app.kappa[i] * app.T[i] - w * app.B[i];
    rB[i] = dB[i] + w * app.N[i];
  }
  const std::vector<AlgebraVector> zero(n);
  const CompareOptions opt{CompareMode::Signed, kBoundaryBand, {}};
  return {compare(rT, zero, "frenet-row-T", tol, opt), compare(rN, zero, "frenet-row-N", tol, opt),
          compare(rB, zero, "frenet-row-B", tol, opt)};
}

const std::vector<std::string>& tracked_equations() {
  static const std::vector<std::string> ids = {
      "Eq17", "Eq18", "Eq19", "Eq20", "Eq21", "Eq22", "Eq23", "Eq24", "Eq25", "Eq26", "Eq27", "Eq29",
      "Eq30", "Eq31", "Eq32", "Eq33", "Eq34", "Eq36", "Eq37", "Eq38", "Eq39", "Eq40", "Eq41",
  };
  return ids;
}

bool VerificationBundle::all_passed() const {
  if (!bertrand.is_pair) return false;
  for (const auto& eq : equations) {
    if (eq.verdict != Verdict::Pass) return false;
  }
  for (const auto& c : checks) {
    if (c.verdict != Verdict::Pass) return false;
  }
  return true;
}

std::size_t VerificationBundle::count(Verdict v) const {
  std::size_t c = 0;
  for (const auto& eq : equations) c += eq.verdict == v ? 1 : 0;
  return c;
}

namespace {

std::vector<bool> merge_flags(std::initializer_list<const std::vector<bool>*> masks, std::size_t n) {
  std::vector<bool> out(n, false);
  for (const auto* m : masks) {
    if (m == nullptr || m->empty()) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] || (*m)[i];
  }
  return out;
}

std::vector<bool> negate(const std::vector<bool>& v) {
  std::vector<bool> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = !v[i];
  return out;
}

class BundleBuilder {
 public:
  explicit BundleBuilder(VerificationBundle& bundle) : bundle_(bundle) {}

  void begin(std::string equation) { bundle_.equations.push_back({std::move(equation), Verdict::Degenerate, {}}); }

  template <typename V>
  void add(std::string id, const std::vector<V>& closed, const std::vector<V>& numeric, double tol,
           CompareOptions opt) {
    bundle_.equations.back().reports.push_back(run(std::move(id), closed, numeric, tol, opt));
  }

  template <typename V>
  void check(std::string id, const std::vector<V>& closed, const std::vector<V>& numeric, double tol,
             CompareOptions opt) {
    bundle_.checks.push_back(run(std::move(id), closed, numeric, tol, opt));
  }

  void check(ResidualReport rep) { bundle_.checks.push_back(std::move(rep)); }

  void finish() {
    for (auto& eq : bundle_.equations) {
      bool any_fail = false;
      bool any_degenerate = eq.reports.empty();
      for (const auto& r : eq.reports) {
        any_fail = any_fail || r.verdict == Verdict::Fail;
        any_degenerate = any_degenerate || r.verdict == Verdict::Degenerate;
      }
      eq.verdict = any_fail ? Verdict::Fail : any_degenerate ? Verdict::Degenerate : Verdict::Pass;
    }
  }

 private:
  template <typename V>
  ResidualReport run(std::string id, const std::vector<V>& closed, const std::vector<V>& numeric, double tol,
                     const CompareOptions& opt) {
    const std::span<const V> a(closed);
    const std::span<const V> b(numeric);
    ResidualReport rep = compare(a, b, std::move(id), tol, opt);
    if (rep.verdict == Verdict::Pass) rep.negative_control_flipped = negative_control_flips(a, b, tol, opt);
    return rep;
  }

  VerificationBundle& bundle_;
};

ResidualReport scalar_bound(std::string id, const std::vector<double>& residuals, double tol) {
  const std::vector<double> zero(residuals.size(), 0.0);
  return compare(residuals, zero, std::move(id), tol, CompareOptions{CompareMode::Signed, 0, {}});
}

void algebra_checks(BundleBuilder& out, const LieStructure& lie, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double bound = 10.0 / std::sqrt(3.0);
  std::uniform_real_distribution<double> coord(-bound, bound);
  auto draw = [&] { return AlgebraVector{coord(rng), coord(rng), coord(rng)}; };
  constexpr std::size_t kTriples = 1000;
  std::vector<double> anti(kTriples), jacobi(kTriples), adinv(kTriples);
  for (std::size_t k = 0; k < kTriples; ++k) {
    const AlgebraVector x = draw(), y = draw(), z = draw();
    anti[k] = max_abs_component(bracket(x, y, lie) + bracket(y, x, lie));
    jacobi[k] = max_abs_component(bracket(x, bracket(y, z, lie), lie) + bracket(y, bracket(z, x, lie), lie) +
                                  bracket(z, bracket(x, y, lie), lie));
    adinv[k] = std::fabs(inner(x, bracket(y, z, lie)) - inner(bracket(x, y, lie), z));
  }
  out.check(scalar_bound("algebra-antisymmetry", anti, 1e-12));
  out.check(scalar_bound("algebra-jacobi", jacobi, 1e-12));
  out.check(scalar_bound("algebra-ad-invariance", adinv, 1e-12));
}

}  // namespace

VerificationBundle run_full_verification(const CurveSpec& spec, int epsilon, const ToleranceProfile& tol,
                                         std::uint64_t seed) {
  const ApparatusField mate = integrate_frenet(spec);
  const LieStructure& lie = spec.structure;
  const Grid& grid = mate.grid;
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double eps = static_cast<double>(epsilon);

  VerificationBundle bundle;
  bundle.tau_G = lie.tau_G;
  bundle.epsilon = epsilon;
  bundle.s0 = grid.s0();
  bundle.s1 = grid.s1();
  bundle.samples = n;
  bundle.seed = seed;
  bundle.tolerances = tol;
  bundle.bertrand = check_bertrand(mate, epsilon, tol.bertrand);
  bundle.mate_class = classify(mate, tol.classify);

  const MateScalars m = mate_scalars(mate);
  const MateApparatus pair = mate_apparatus(mate, epsilon);
  const IndicatrixApparatus ind_t = tangent_indicatrix(mate, epsilon);
  const IndicatrixApparatus ind_n = normal_indicatrix(mate, epsilon);
  const IndicatrixApparatus ind_b = binormal_indicatrix(mate, epsilon);

  // Independent route for the offset: least squares on lambda kappa + mu (tau - tau_G) = 1.
  {
    double skk = 0, skw = 0, sww = 0, sk = 0, sw = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!grid.is_interior(i)) continue;
      const double k = m.kappa[i], w = m.twist[i];
      skk += k * k;
      skw += k * w;
      sww += w * w;
      sk += k;
      sw += w;
    }
    const double det = skk * sww - skw * skw;
    bundle.lambda_fit = det != 0.0 ? (sk * sww - sw * skw) / det : kNaN;
    bundle.mu_fit = det != 0.0 ? (skk * sw - skw * sk) / det : kNaN;
  }
  // Offset in the alpha = mate - lambda eps N_mate convention.
  const double lambda_offset_conv = -eps * bundle.lambda_fit;

  const std::size_t stride = oracle_stride(grid);

  // Partner tangent from differentiating the offset curve directly.
  std::vector<AlgebraVector> t_offset(n);
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraVector v = (1.0 + lambda_offset_conv * eps * m.kappa[i]) * mate.T[i] -
                            (lambda_offset_conv * eps * m.twist[i]) * mate.B[i];
    t_offset[i] = normalized(v);
  }

  // Finite-difference apparatus of the closed-form partner tangent, with ds/ds* from the arc-length map.
  const TangentFrame partner = frame_from_tangent(pair.derived.T, grid, pair.rate, lie, stride);
  const std::vector<bool> partner_undefined = negate(partner.defined);
  const std::vector<bool> off = pair.singular;
  const std::vector<bool> flags9 = merge_flags({&off, &partner_undefined}, n);

  const OracleApparatus ot = oracle_apparatus(ind_t.curve, grid, lie, stride);
  const OracleApparatus on = oracle_apparatus(ind_n.curve, grid, lie, stride);
  const OracleApparatus ob = oracle_apparatus(ind_b.curve, grid, lie, stride);
  const std::vector<bool> ot_undef = negate(ot.defined), on_undef = negate(on.defined), ob_undef = negate(ob.defined);
  const std::vector<bool> flags_t = merge_flags({&ind_t.singular, &ot_undef}, n);
  const std::vector<bool> flags_n = merge_flags({&ind_n.singular, &on_undef}, n);
  const std::vector<bool> flags_b = merge_flags({&ind_b.singular, &ob_undef}, n);

  const double t1 = tol.first_derivative;
  const double t2 = tol.second_derivative;
  // Each chained finite-difference pass widens the low-order boundary zone by
  // one stencil half-width, so comparisons exclude that many samples per pass.
  const auto opts = [stride](CompareMode mode, std::vector<bool> f, std::size_t passes) {
    return CompareOptions{mode, kBoundaryBand * stride * passes, std::move(f)};
  };
  const auto vec = [&](std::vector<bool> f, std::size_t passes) {
    return opts(CompareMode::SignAligned, std::move(f), passes);
  };
  const auto sgn = [&](std::vector<bool> f, std::size_t passes) {
    return opts(CompareMode::Signed, std::move(f), passes);
  };
  const auto mag = [&](std::vector<bool> f, std::size_t passes) {
    return opts(CompareMode::Magnitude, std::move(f), passes);
  };

  BundleBuilder out(bundle);

  out.begin("Eq17");
  {
    std::vector<double> offset(n), fit(n, bundle.lambda_fit);
    for (std::size_t i = 0; i < n; ++i) offset[i] = -eps * bundle.bertrand.lambda[i];
    out.add("Eq17-lambda", offset, fit, t1, sgn(off, 1));
  }

  out.begin("Eq18");
  out.add("Eq18-T", pair.derived.T, t_offset, t1, vec(off, 1));

  out.begin("Eq19");
  out.add("Eq19-B", pair.derived.B, partner.field.B, t1, vec(flags9, 2));

  out.begin("Eq20");
  out.add("Eq20-kappa", pair.kappa_signed, partner.field.kappa, t2, mag(flags9, 2));

  const GammaField kg_normal = numeric_geodesic_curvature(pair.derived.N, grid, stride);
  out.begin("Eq21");
  out.add("Eq21-Gamma", pair.gamma, kg_normal.values, t2, vec(merge_flags({&off, &kg_normal.singular}, n), 1));

  out.begin("Eq22");
  {
    std::vector<double> rate_offset(n);
    for (std::size_t i = 0; i < n; ++i) {
      rate_offset[i] = 1.0 / mate_form::offset_rate(lambda_offset_conv, epsilon, m.kappa[i], m.twist[i]);
    }
    const std::vector<double> length_offset = cumulative_trapezoid(rate_offset, h);
    out.add("Eq22-s", pair.s_of_sstar, length_offset, t1, mag(off, 1));
  }

  out.begin("Eq23");
  out.add("Eq23-alpha_t", ind_t.curve, t_offset, t1, vec(off, 1));

  out.begin("Eq24");
  out.add("Eq24-Tt", ind_t.T, ot.field.T, t1, vec(flags_t, 2));
  out.add("Eq24-Nt", ind_t.N, ot.field.N, t2, vec(flags_t, 3));
  out.add("Eq24-Bt", ind_t.B, ot.field.B, t2, vec(flags_t, 3));

  out.begin("Eq25");
  out.add("Eq25-st", ind_t.s, ot.arclength, t1, sgn(flags_t, 2));
  out.add("Eq25-kappa_t", ind_t.kappa, ot.field.kappa, t2, mag(flags_t, 3));
  out.add("Eq25-tau_t", ind_t.twist, ot.field.twist(), t2, vec(flags_t, 4));

  const GammaField kg_t = numeric_geodesic_curvature(ind_t.N, grid, stride);
  out.begin("Eq26");
  out.add("Eq26-Gamma_t", ind_t.gamma, kg_t.values, t2, vec(merge_flags({&ind_t.singular, &kg_t.singular}, n), 2));

  out.begin("Eq27");
  {
    // On a Bertrand mate, sigma'/sigma = -residual / (kappa kappa' (1 + H^2)).
    const SigmaField sigma = sigma_function(mate, std::vector<double>(n, 1.0), stride);
    const std::vector<double> dsigma = fd::first_derivative(std::span<const double>(sigma.values), h, stride);
    std::vector<double> predicted(n, kNaN);
    std::vector<bool> undefined(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      undefined[i] = !sigma.defined[i];
      predicted[i] = -(dsigma[i] / sigma.values[i]) * m.kappa[i] * m.dkappa[i] * (1.0 + m.H[i] * m.H[i]);
    }
    const std::vector<double> closed = tangent_spherical_helix_residual(mate);
    out.add("Eq27-condition", closed, predicted, t2, sgn(merge_flags({&m.rho_singular, &undefined}, n), 2));
  }

  out.begin("Eq29");
  out.add("Eq29-Tn", ind_n.T, on.field.T, t1, vec(flags_n, 1));
  out.begin("Eq30");
  out.add("Eq30-Nn", ind_n.N, on.field.N, t2, vec(flags_n, 2));
  out.begin("Eq31");
  out.add("Eq31-Bn", ind_n.B, on.field.B, t2, vec(flags_n, 2));

  out.begin("Eq32");
  out.add("Eq32-sn", ind_n.s, on.arclength, t1, sgn(flags_n, 1));
  out.add("Eq32-kappa_n", ind_n.kappa, on.field.kappa, t2, mag(flags_n, 2));

  out.begin("Eq33");
  out.add("Eq33-tau_n", ind_n.twist, on.field.twist(), t2, vec(flags_n, 3));

  out.begin("Eq34");
  {
    // Invert the torsion relation with the numeric torsion of the normal image.
    const std::vector<double> closed = normal_planarity_residual(mate);
    const std::vector<double> torsion = on.field.twist();
    std::vector<double> implied(n, kNaN);
    for (std::size_t i = 0; i < n; ++i) {
      const MatePoint p = m.at(i);
      const double q = p.dkappa * p.dkappa * (p.H - p.rho) * (p.H - p.rho) +
                       std::pow(p.kappa, 4) * std::pow(1.0 + p.H * p.H, 3.0);
      implied[i] = torsion[i] * q / (eps * (p.H - p.rho));
    }
    out.add("Eq34-condition", closed, implied, t2, vec(flags_n, 3));
  }

  out.begin("Eq36");
  out.add("Eq36-alpha_b", ind_b.curve, partner.field.B, t1, vec(flags9, 2));
  out.begin("Eq37");
  out.add("Eq37-Tb", ind_b.T, ob.field.T, t1, vec(flags_b, 2));
  out.begin("Eq38");
  out.add("Eq38-Nb", ind_b.N, ob.field.N, t2, vec(flags_b, 3));
  out.begin("Eq39");
  out.add("Eq39-Bb", ind_b.B, ob.field.B, t2, vec(flags_b, 3));

  out.begin("Eq40");
  out.add("Eq40-sb", ind_b.s, ob.arclength, t1, sgn(flags_b, 2));
  out.add("Eq40-kappa_b", ind_b.kappa, ob.field.kappa, t2, mag(flags_b, 3));
  out.add("Eq40-tau_b", ind_b.twist, ob.field.twist(), t2, vec(flags_b, 4));

  const GammaField kg_b = numeric_geodesic_curvature(ind_b.N, grid, stride);
  out.begin("Eq41");
  out.add("Eq41-Gamma_b", ind_b.gamma, kg_b.values, t2, vec(merge_flags({&ind_b.singular, &kg_b.singular}, n), 2));

  // Partner relations that have no equation number of their own.
  {
    std::vector<AlgebraVector> eps_nm(n);
    for (std::size_t i = 0; i < n; ++i) eps_nm[i] = eps * mate.N[i];
    out.check("Thm9-N-eq-eps-Nmate", pair.derived.N, eps_nm, tol.structural, CompareOptions{CompareMode::Signed, 0, {}});
    out.check("Thm9-N-oracle", pair.derived.N, partner.field.N, t1, vec(flags9, 2));
    out.check("Thm9-tau", pair.twist, partner.field.twist(), t2, vec(flags9, 3));

    std::vector<double> defect(n, kNaN);
    for (std::size_t i = 0; i < n; ++i) {
      if (!off[i]) defect[i] = orthonormality_defect(pair.derived.T[i], pair.derived.N[i], pair.derived.B[i]);
    }
    out.check(scalar_bound("Thm9-frame-orthonormality", defect, tol.algebraic));

    std::vector<double> from_map(n, kNaN), from_offset(n, kNaN);
    for (std::size_t i = 0; i < n; ++i) {
      from_map[i] = 1.0 / pair.rate[i];
      from_offset[i] =
          mate_form::offset_rate(bundle.bertrand.lambda_mean, epsilon, m.kappa[i], m.twist[i]);
    }
    out.check("Eq10-vs-Eq22", from_map, from_offset, 1e-6, mag(off, 1));
  }

  // Exact identities between the tangent and binormal closed forms.
  {
    const CompareOptions exact{CompareMode::Signed, kBoundaryBand, merge_flags({&ind_t.singular}, n)};
    std::vector<AlgebraVector> t_scaled(n), n_scaled(n);
    std::vector<double> tw_scaled(n), k_neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      t_scaled[i] = -eps * ind_t.T[i];
      n_scaled[i] = -eps * ind_t.N[i];
      tw_scaled[i] = -eps * ind_t.twist[i];
      k_neg[i] = -ind_t.kappa[i];
    }
    out.check("Gamma_t_eq_Gamma_b", ind_t.gamma, ind_b.gamma, tol.structural, exact);
    out.check("Bt_eq_Bb", ind_b.B, ind_t.B, tol.structural, exact);
    out.check("Tb_eq_minus_eps_Tt", ind_b.T, t_scaled, tol.structural, exact);
    out.check("Nb_eq_minus_eps_Nt", ind_b.N, n_scaled, tol.structural, exact);
    out.check("taub_eq_minus_eps_taut", ind_b.twist, tw_scaled, tol.structural, exact);
    out.check("kappab_eq_minus_kappat", ind_b.kappa, k_neg, tol.structural, exact);
  }

  // Indicatrices stay on the unit sphere.
  for (const IndicatrixApparatus* ind : {&ind_t, &ind_n, &ind_b}) {
    std::vector<double> dev(n, kNaN);
    for (std::size_t i = 0; i < n; ++i) dev[i] = std::fabs(norm(ind->curve[i]) - 1.0);
    const std::vector<double> zero(n, 0.0);
    out.check(std::string("sphere-") + std::string(indicatrix_name(ind->kind)), dev, zero, tol.algebraic,
              CompareOptions{CompareMode::Signed, 0, ind->singular});
  }

  // Oracle self-consistency: the mate integration satisfies its own ODE rows.
  for (ResidualReport& r : verify_frame_odes(mate)) out.check(std::move(r));
  algebra_checks(out, lie, seed);

  out.finish();
  return bundle;
}

}  // namespace lieframe
