#include "lieframe/output.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>

#include "json.hpp"

namespace lieframe {

namespace {

using nlohmann::ordered_json;

ordered_json real(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json reals(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(real(x));
  return a;
}

ordered_json flags(const std::vector<bool>& v) {
  ordered_json a = ordered_json::array();
  for (bool b : v) a.push_back(b);
  return a;
}

ordered_json vectors(const std::vector<AlgebraVector>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(ordered_json::array({real(x.x1), real(x.x2), real(x.x3)}));
  return a;
}

void put(std::ostream& out, double v) { out << format_real(v); }

void put(std::ostream& out, const AlgebraVector& v) {
  out << format_real(v.x1) << ',' << format_real(v.x2) << ',' << format_real(v.x3);
}

void dump(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

ordered_json report_json(const ResidualReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["verdict"] = std::string(verdict_name(r.verdict));
  j["max_abs"] = real(r.max_abs);
  j["mean_abs"] = real(r.mean_abs);
  j["quantile95"] = real(r.quantile95);
  j["n_compared"] = r.n_compared;
  j["n_flagged"] = r.n_flagged;
  j["worst_index"] = r.worst_index;
  j["tolerance"] = r.tolerance;
  j["mode"] = std::string(compare_mode_name(r.mode));
  j["sign"] = r.sign;
  j["negative_control_flipped"] =
      r.negative_control_flipped ? ordered_json(*r.negative_control_flipped) : ordered_json(nullptr);
  return j;
}

void report_row(std::ostream& out, const std::string& group, const ResidualReport& r) {
  out << group << ',' << r.id << ',' << verdict_name(r.verdict) << ',' << format_real(r.max_abs) << ','
      << format_real(r.mean_abs) << ',' << format_real(r.quantile95) << ',' << r.n_compared << ',' << r.n_flagged
      << ',' << format_real(r.tolerance) << ',' << compare_mode_name(r.mode) << ',' << r.sign << ',';
  if (r.negative_control_flipped) out << (*r.negative_control_flipped ? "flipped" : "held");
  out << '\n';
}

ordered_json classification(const HelixClass& c) {
  ordered_json j;
  j["planar"] = c.planar;
  j["general_helix"] = c.general_helix;
  j["slant_helix"] = c.slant_helix;
  return j;
}

}  // namespace

std::string format_real(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_apparatus_csv(std::ostream& out, const ApparatusField& app) {
  out << "s,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau,tauG,H,sigma,sigma_defined\n";
  for (std::size_t i = 0; i < app.size(); ++i) {
    put(out, app.grid.at(i));
    out << ',';
    put(out, app.T[i]);
    out << ',';
    put(out, app.N[i]);
    out << ',';
    put(out, app.B[i]);
    for (double v : {app.kappa[i], app.tau[i], app.tauG[i], app.H[i], app.sigma[i]}) {
      out << ',';
      put(out, v);
    }
    out << ',' << (app.sigma_defined[i] ? 1 : 0) << '\n';
  }
}

void write_apparatus_json(std::ostream& out, const ApparatusField& app) {
  ordered_json j;
  j["s"] = reals(app.grid.values());
  j["T"] = vectors(app.T);
  j["N"] = vectors(app.N);
  j["B"] = vectors(app.B);
  j["kappa"] = reals(app.kappa);
  j["tau"] = reals(app.tau);
  j["tauG"] = reals(app.tauG);
  j["H"] = reals(app.H);
  j["sigma"] = reals(app.sigma);
  j["sigma_defined"] = flags(app.sigma_defined);
  dump(out, j);
}

void write_classification_json(std::ostream& out, const HelixClass& c, double tol,
                               const std::optional<bool>& matches_expectation) {
  ordered_json j = classification(c);
  j["tolerance"] = tol;
  if (matches_expectation) j["matches_expectation"] = *matches_expectation;
  dump(out, j);
}

void write_classification_csv(std::ostream& out, const HelixClass& c, double tol) {
  out << "planar,general_helix,slant_helix,tolerance\n"
      << c.planar << ',' << c.general_helix << ',' << c.slant_helix << ',' << format_real(tol) << '\n';
}

void write_mate_csv(std::ostream& out, const BertrandReport& report, const MateApparatus& mate) {
  out << "s,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,kappa_signed,tau,tauG,H,s_of_sstar,ds_dsstar,gamma,rho,lambda,"
         "pair_residual,singular\n";
  const ApparatusField& d = mate.derived;
  for (std::size_t i = 0; i < d.size(); ++i) {
    put(out, d.grid.at(i));
    out << ',';
    put(out, d.T[i]);
    out << ',';
    put(out, d.N[i]);
    out << ',';
    put(out, d.B[i]);
    for (double v : {d.kappa[i], mate.kappa_signed[i], d.tau[i], d.tauG[i], d.H[i], mate.s_of_sstar[i],
                     mate.rate[i], mate.gamma[i], report.rho[i], report.lambda[i], report.pair_residual[i]}) {
      out << ',';
      put(out, v);
    }
    out << ',' << (mate.singular[i] ? 1 : 0) << '\n';
  }
}

void write_bertrand_json(std::ostream& out, const BertrandReport& report, const MateApparatus* mate,
                         const std::optional<bool>& matches_expectation) {
  ordered_json j;
  j["epsilon"] = report.epsilon;
  j["is_pair"] = report.is_pair;
  j["lambda_mean"] = real(report.lambda_mean);
  j["lambda_maxdev"] = real(report.lambda_maxdev);
  j["lambda_offset"] = real(report.lambda_offset);
  j["mu_fit"] = real(report.mu_fit);
  j["max_pair_residual"] = real(report.max_pair_residual);
  j["tolerance"] = report.tolerance;
  j["singular_samples"] = report.singular_samples;
  if (matches_expectation) j["matches_expectation"] = *matches_expectation;
  j["rho"] = reals(report.rho);
  j["lambda"] = reals(report.lambda);
  j["pair_residual"] = reals(report.pair_residual);
  if (mate != nullptr) {
    ordered_json m;
    m["T"] = vectors(mate->derived.T);
    m["N"] = vectors(mate->derived.N);
    m["B"] = vectors(mate->derived.B);
    m["kappa"] = reals(mate->derived.kappa);
    m["kappa_signed"] = reals(mate->kappa_signed);
    m["tau"] = reals(mate->derived.tau);
    m["s_of_sstar"] = reals(mate->s_of_sstar);
    m["ds_dsstar"] = reals(mate->rate);
    m["gamma"] = reals(mate->gamma);
    m["singular"] = flags(mate->singular);
    j["mate"] = m;
  }
  dump(out, j);
}

void write_indicatrix_csv(std::ostream& out, const IndicatrixApparatus& ind) {
  out << "s,x1,x2,x3,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,twist,s_rate,s_signed,s_ind,gamma,singular\n";
  const double nan = std::nan("");
  for (std::size_t i = 0; i < ind.size(); ++i) {
    put(out, ind.grid.at(i));
    for (const AlgebraVector* v : {&ind.curve[i], &ind.T[i], &ind.N[i], &ind.B[i]}) {
      out << ',';
      put(out, *v);
    }
    const double g = ind.gamma.empty() ? nan : ind.gamma[i];
    for (double v : {ind.kappa[i], ind.twist[i], ind.s_rate[i], ind.s_signed[i], ind.s[i], g}) {
      out << ',';
      put(out, v);
    }
    out << ',' << (ind.singular[i] ? 1 : 0) << '\n';
  }
}

void write_indicatrix_json(std::ostream& out, const IndicatrixApparatus& ind) {
  ordered_json j;
  j["kind"] = std::string(indicatrix_name(ind.kind));
  j["epsilon"] = ind.epsilon;
  j["s"] = reals(ind.grid.values());
  j["curve"] = vectors(ind.curve);
  j["T"] = vectors(ind.T);
  j["N"] = vectors(ind.N);
  j["B"] = vectors(ind.B);
  j["kappa"] = reals(ind.kappa);
  j["twist"] = reals(ind.twist);
  j["s_rate"] = reals(ind.s_rate);
  j["s_signed"] = reals(ind.s_signed);
  j["s_ind"] = reals(ind.s);
  j["gamma"] = ind.gamma.empty() ? ordered_json(nullptr) : reals(ind.gamma);
  j["singular"] = flags(ind.singular);
  dump(out, j);
}

void write_sphere_header(std::ostream& out) { out << "kind,s,x1,x2,x3,singular\n"; }

void write_sphere_rows(std::ostream& out, const IndicatrixApparatus& ind) {
  const std::string_view kind = indicatrix_name(ind.kind);
  for (std::size_t i = 0; i < ind.size(); ++i) {
    out << kind << ',';
    put(out, ind.grid.at(i));
    out << ',';
    put(out, ind.curve[i]);
    out << ',' << (ind.singular[i] ? 1 : 0) << '\n';
  }
}

void write_bundle_json(std::ostream& out, const VerificationBundle& b) {
  ordered_json j;
  j["tau_G"] = b.tau_G;
  j["epsilon"] = b.epsilon;
  j["domain"] = ordered_json::array({b.s0, b.s1});
  j["samples"] = b.samples;
  j["seed"] = b.seed;
  ordered_json tol;
  tol["algebraic"] = b.tolerances.algebraic;
  tol["first_derivative"] = b.tolerances.first_derivative;
  tol["second_derivative"] = b.tolerances.second_derivative;
  tol["classify"] = b.tolerances.classify;
  tol["bertrand"] = b.tolerances.bertrand;
  tol["structural"] = b.tolerances.structural;
  j["tolerances"] = tol;

  ordered_json br;
  br["is_pair"] = b.bertrand.is_pair;
  br["lambda_mean"] = real(b.bertrand.lambda_mean);
  br["lambda_maxdev"] = real(b.bertrand.lambda_maxdev);
  br["lambda_offset"] = real(b.bertrand.lambda_offset);
  br["mu_fit"] = real(b.bertrand.mu_fit);
  br["max_pair_residual"] = real(b.bertrand.max_pair_residual);
  br["singular_samples"] = b.bertrand.singular_samples.size();
  j["bertrand"] = br;
  j["mate_class"] = classification(b.mate_class);
  j["lambda_fit"] = real(b.lambda_fit);
  j["mu_fit"] = real(b.mu_fit);

  ordered_json summary;
  summary["equations"] = b.equations.size();
  summary["pass"] = b.count(Verdict::Pass);
  summary["fail"] = b.count(Verdict::Fail);
  summary["degenerate"] = b.count(Verdict::Degenerate);
  std::size_t checks_failed = 0;
  for (const auto& c : b.checks) checks_failed += c.verdict == Verdict::Pass ? 0 : 1;
  summary["checks_failed"] = checks_failed;
  summary["all_passed"] = b.all_passed();
  j["summary"] = summary;

  ordered_json eqs = ordered_json::array();
  for (const auto& eq : b.equations) {
    ordered_json e;
    e["equation"] = eq.equation;
    e["verdict"] = std::string(verdict_name(eq.verdict));
    ordered_json reps = ordered_json::array();
    for (const auto& r : eq.reports) reps.push_back(report_json(r));
    e["reports"] = reps;
    eqs.push_back(e);
  }
  j["equations"] = eqs;
  ordered_json checks = ordered_json::array();
  for (const auto& c : b.checks) checks.push_back(report_json(c));
  j["checks"] = checks;
  dump(out, j);
}

void write_bundle_csv(std::ostream& out, const VerificationBundle& b) {
  out << "group,id,verdict,max_abs,mean_abs,quantile95,n_compared,n_flagged,tolerance,mode,sign,negative_control\n";
  for (const auto& eq : b.equations) {
    for (const auto& r : eq.reports) report_row(out, eq.equation, r);
  }
  for (const auto& c : b.checks) report_row(out, "check", c);
}

void write_bundle_table(std::ostream& out, const VerificationBundle& b) {
  const auto row = [&out](const std::string& id, const ResidualReport& r) {
    out << std::left << std::setw(28) << id << std::setw(12) << verdict_name(r.verdict) << std::right
        << std::setw(12) << std::scientific << std::setprecision(3) << r.max_abs << std::setw(12) << r.tolerance
        << std::setw(6) << r.sign << std::setw(8) << r.n_flagged << '\n';
  };
  out << std::left << std::setw(28) << "report" << std::setw(12) << "verdict" << std::right << std::setw(12)
      << "max_abs" << std::setw(12) << "tol" << std::setw(6) << "sign" << std::setw(8) << "flagged" << '\n';
  for (const auto& eq : b.equations) {
    for (const auto& r : eq.reports) row(r.id, r);
  }
  for (const auto& c : b.checks) row(c.id, c);
  out << std::defaultfloat;
  out << "equations: " << b.equations.size() << "  pass " << b.count(Verdict::Pass) << "  fail "
      << b.count(Verdict::Fail) << "  degenerate " << b.count(Verdict::Degenerate) << '\n';
  out << "pair: " << (b.bertrand.is_pair ? "yes" : "no") << "  all passed: " << (b.all_passed() ? "yes" : "no")
      << '\n';
}

}  // namespace lieframe
