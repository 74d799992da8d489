// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exits non-zero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "expr_trees.hpp"
#include "families.hpp"
#include "lieframe/cli.hpp"
#include "lieframe/config.hpp"
#include "lieframe/output.hpp"
#include "lieframe/verify.hpp"

using namespace lieframe;
using fixtures::interior_max_abs;
using fixtures::interior_max_diff;
namespace fs = std::filesystem;

namespace {

constexpr double kPresets[] = {0.0, 0.5, 1.0};

/// Collects failed conditions for one criterion.
class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    if (ok()) return notes_;
    std::string s = std::to_string(failed_) + " failed condition(s): ";
    for (std::size_t i = 0; i < failures_.size(); ++i) s += (i ? "; " : "") + failures_[i];
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_{0};
  std::string notes_;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string tag(double tau_G, int eps = 0) {
  std::string s = "tau_G=" + sci(tau_G);
  if (eps != 0) s += " eps=" + std::to_string(eps);
  return s;
}

std::vector<double> sampled(const ScalarFunction& f, const Grid& g) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g.at(i));
  return v;
}

double max_defect(const ApparatusField& app) {
  double m = 0.0;
  for (std::size_t i = 0; i < app.size(); ++i) m = std::fmax(m, orthonormality_defect(app.T[i], app.N[i], app.B[i]));
  return m;
}

/// Mates of both constructed Bertrand families.
std::vector<std::pair<std::string, CurveSpec>> bertrand_inputs(double tau_G) {
  return {{"pair " + tag(tau_G), fixtures::bertrand_family(tau_G, 0.6, 1.3)},
          {"slant " + tag(tau_G), fixtures::slant_bertrand_family(tau_G)}};
}

void algebra(Outcome& o) {
  const double bound = 10.0 / std::sqrt(3.0);
  double worst = 0.0;
  for (double g : kPresets) {
    const LieStructure lie{g};
    std::mt19937_64 rng(2024);
    double anti = 0.0, jacobi = 0.0, adinv = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const AlgebraVector x = fixtures::random_vector(rng, bound);
      const AlgebraVector y = fixtures::random_vector(rng, bound);
      const AlgebraVector z = fixtures::random_vector(rng, bound);
      anti = std::fmax(anti, max_abs_component(bracket(x, y, lie) + bracket(y, x, lie)));
      const AlgebraVector cyc = bracket(x, bracket(y, z, lie), lie) + bracket(y, bracket(z, x, lie), lie) +
                                bracket(z, bracket(x, y, lie), lie);
      jacobi = std::fmax(jacobi, max_abs_component(cyc));
      adinv = std::fmax(adinv, std::fabs(inner(x, bracket(y, z, lie)) - inner(bracket(x, y, lie), z)));
    }
    o.require(anti < 1e-12, "antisymmetry " + tag(g) + " = " + sci(anti));
    o.require(jacobi < 1e-12, "Jacobi " + tag(g) + " = " + sci(jacobi));
    o.require(adinv < 1e-12, "ad-invariance " + tag(g) + " = " + sci(adinv));
    worst = std::fmax(worst, std::fmax(anti, std::fmax(jacobi, adinv)));
  }
  o.note("3000 triples, worst residual " + sci(worst));
}

void circle(Outcome& o) {
  const ApparatusField app = integrate_frenet(fixtures::make_spec([](double) { return 1.0; }, [](double) { return 0.0; },
                                                                  0.0, 2 * std::numbers::pi, 2001, 0.0));
  const double closure = norm(app.T.back() - app.T.front());
  const double drift = max_defect(app);
  o.require(closure < 1e-6, "closure " + sci(closure));
  o.require(drift < 1e-8, "drift " + sci(drift));
  o.note("closure " + sci(closure) + ", drift " + sci(drift));
}

void round_trip(Outcome& o) {
  double worst = 0.0;
  for (double g : kPresets) {
    std::mt19937_64 rng(100 + static_cast<unsigned>(g * 10));
    for (int k = 0; k < 20; ++k) {
      const CurveSpec spec = fixtures::random_smooth_spec(rng, g);
      const ApparatusField app = integrate_frenet(spec);
      const ApparatusField rec = apparatus_from_tangent(app.T, app.grid, spec.structure);
      const double dk = interior_max_diff(rec.kappa, sampled(spec.kappa, app.grid));
      const double dt = interior_max_diff(rec.tau, sampled(spec.tau, app.grid));
      o.require(dk < 1e-4 && dt < 1e-4, "input " + std::to_string(k) + " " + tag(g) + ": " + sci(dk) + ", " + sci(dt));
      worst = std::fmax(worst, std::fmax(dk, dt));
    }
  }
  o.note("60 specs, worst max-norm error " + sci(worst));
}

void classification(Outcome& o, const fs::path& regression_dir) {
  for (double g : kPresets) {
    const auto helix = integrate_frenet(fixtures::make_spec([](double s) { return 1 + s * s; },
                                                            [](double s) { return 2 * (1 + s * s); }, 0, 1, 2001, g));
    o.require(classify(helix, 1e-6).general_helix, "constant H not a general helix " + tag(g));
    const HelixClass slant = classify(integrate_frenet(fixtures::slant_helix_family(g)), 1e-6);
    o.require(slant.slant_helix && !slant.general_helix, "sigma-constant family " + tag(g));
    const auto planar = integrate_frenet(fixtures::make_spec([](double s) { return 1 + s; }, [](double) { return 0.0; },
                                                             0, 1, 2001, g));
    o.require(classify(planar, 1e-6).planar, "tau = tau_G not planar " + tag(g));
  }
  std::size_t files = 0, verdicts = 0;
  for (const auto& entry : fs::directory_iterator(regression_dir)) {
    const RunConfig cfg = load_config(entry.path());
    const std::string name = entry.path().filename().string();
    o.require(cfg.expect.has_value(), name + " has no expectation");
    if (!cfg.expect) continue;
    const ApparatusField app = integrate_frenet(make_curve_spec(cfg));
    const HelixClass c = classify(app, 1e-6);
    const Expectation& e = *cfg.expect;
    const auto check = [&](const std::optional<bool>& want, bool got, const char* what) {
      if (!want) return;
      ++verdicts;
      o.require(*want == got, name + " " + what);
    };
    check(e.planar, c.planar, "planar");
    check(e.general_helix, c.general_helix, "general_helix");
    check(e.slant_helix, c.slant_helix, "slant_helix");
    if (e.is_pair) check(e.is_pair, check_bertrand(app, cfg.epsilon, 1e-6).is_pair, "is_pair");
    ++files;
  }
  o.require(files >= 10, "regression set has " + std::to_string(files) + " files");
  o.note(std::to_string(files) + " regression inputs, " + std::to_string(verdicts) + " verdicts at tol 1e-6");
}

void bertrand(Outcome& o) {
  double worst = 0.0;
  std::size_t rejected = 0;
  for (double g : kPresets) {
    const BertrandReport r = check_bertrand(integrate_frenet(fixtures::bertrand_family(g)), 1, 1e-6);
    const double err = std::fabs(r.lambda_offset - 0.5);
    o.require(r.is_pair, "constructed family not a pair " + tag(g));
    o.require(err < 1e-3, "lambda error " + sci(err) + " " + tag(g));
    worst = std::fmax(worst, err);
    const std::vector<CurveSpec> controls = fixtures::non_bertrand_inputs(g);
    o.require(controls.size() == 10, "expected 10 non-Bertrand inputs");
    for (std::size_t k = 0; k < controls.size(); ++k) {
      const bool pair = check_bertrand(integrate_frenet(controls[k]), 1).is_pair;
      o.require(!pair, "non-Bertrand input " + std::to_string(k) + " accepted " + tag(g));
      if (!pair) ++rejected;
    }
  }
  o.note("lambda error " + sci(worst) + ", " + std::to_string(rejected) + "/30 controls rejected");
}

void mate_identities(Outcome& o) {
  double defect = 0.0, kappa_gap = 0.0, rate_gap = 0.0;
  for (double g : kPresets) {
    const ApparatusField mate = integrate_frenet(fixtures::bertrand_family(g, 0.6, 1.3));
    for (int eps : {1, -1}) {
      const MateApparatus pair = mate_apparatus(mate, eps);
      const ApparatusField& d = pair.derived;
      bool shared = true;
      for (std::size_t i = 0; i < mate.size(); ++i) {
        defect = std::fmax(defect, orthonormality_defect(d.T[i], d.N[i], d.B[i]));
        shared = shared && d.N[i] == static_cast<double>(eps) * mate.N[i];
      }
      o.require(shared, "N differs from eps N~ " + tag(g, eps));

      const std::size_t stride = oracle_stride(mate.grid);
      const TangentFrame oracle = frame_from_tangent(d.T, mate.grid, pair.rate, LieStructure{g}, stride);
      const std::size_t band = 2 * kBoundaryBand * stride;
      for (std::size_t i = band; i + band < mate.size(); ++i) {
        if (!oracle.defined[i]) {
          o.require(false, "oracle undefined at interior sample " + std::to_string(i));
          break;
        }
        kappa_gap = std::fmax(kappa_gap, std::fabs(oracle.field.kappa[i] - std::fabs(pair.kappa_signed[i])));
      }

      const BertrandReport r = check_bertrand(mate, eps);
      const ArcLengthMap map = arclength_map(mate);
      const MateScalars m = mate_scalars(mate);
      for (std::size_t i = kBoundaryBand; i + kBoundaryBand < mate.size(); ++i) {
        if (map.singular[i]) continue;
        const double from_offset = mate_form::offset_rate(r.lambda_mean, eps, m.kappa[i], m.twist[i]);
        rate_gap = std::fmax(rate_gap, std::fabs(std::fabs(1.0 / map.rate[i]) - std::fabs(from_offset)));
      }
    }
  }
  o.require(defect < 1e-9, "orthonormality " + sci(defect));
  o.require(kappa_gap < 1e-3, "oracle curvature gap " + sci(kappa_gap));
  o.require(rate_gap < 1e-6, "arc-length rate cross-check " + sci(rate_gap));
  o.note("defect " + sci(defect) + ", curvature gap " + sci(kappa_gap) + ", rate gap " + sci(rate_gap));
}

void structural(Outcome& o) {
  double worst = 0.0;
  for (double g : kPresets) {
    for (const auto& [name, spec] : bertrand_inputs(g)) {
      const ApparatusField mate = integrate_frenet(spec);
      const GammaField gt = gamma_tangent(mate);
      const GammaField gb = gamma_binormal(mate);
      for (int eps : {1, -1}) {
        const double e = eps;
        const IndicatrixApparatus t = tangent_indicatrix(mate, eps);
        const IndicatrixApparatus b = binormal_indicatrix(mate, eps);
        double m = 0.0;
        for (std::size_t i = 0; i < mate.size(); ++i) {
          if (t.singular[i] || b.singular[i]) continue;
          m = std::fmax(m, max_abs_component(b.B[i] - t.B[i]));
          m = std::fmax(m, max_abs_component(b.T[i] + e * t.T[i]));
          m = std::fmax(m, max_abs_component(b.N[i] + e * t.N[i]));
          m = std::fmax(m, std::fabs(b.twist[i] + e * t.twist[i]));
          m = std::fmax(m, std::fabs(b.kappa[i] + t.kappa[i]));
          if (!gt.singular[i] && !gb.singular[i]) m = std::fmax(m, std::fabs(gt.values[i] - gb.values[i]));
        }
        o.require(m <= 1e-12, name + " eps=" + std::to_string(eps) + ": " + sci(m));
        worst = std::fmax(worst, m);
      }
    }
  }
  o.note("12 mate/sign cases, worst " + sci(worst));
}

void sphere(Outcome& o) {
  double worst = 0.0;
  for (double g : kPresets) {
    for (const auto& [name, spec] : bertrand_inputs(g)) {
      const ApparatusField mate = integrate_frenet(spec);
      for (int eps : {1, -1}) {
        for (IndicatrixKind k : {IndicatrixKind::Tangent, IndicatrixKind::Normal, IndicatrixKind::Binormal}) {
          const IndicatrixApparatus ind = indicatrix(mate, k, eps);
          double m = 0.0;
          for (const AlgebraVector& x : ind.curve) m = std::fmax(m, std::fabs(norm(x) - 1.0));
          o.require(m < 1e-9, name + " " + std::string(indicatrix_name(k)) + ": " + sci(m));
          worst = std::fmax(worst, m);
        }
      }
    }
  }
  o.note("36 images, worst " + sci(worst));
}

void predicate(Outcome& o) {
  double on = 0.0, off = std::numeric_limits<double>::infinity();
  for (double g : kPresets) {
    for (const auto& [name, spec] : bertrand_inputs(g)) {
      const ApparatusField mate = integrate_frenet(spec);
      const bool slant = classify(mate).slant_helix;
      const double r = interior_max_abs(tangent_spherical_helix_residual(mate));
      if (slant) {
        o.require(r < 1e-4, name + " slant but residual " + sci(r));
        on = std::fmax(on, r);
      } else {
        o.require(r > 1e-2, name + " not slant but residual " + sci(r));
        off = std::fmin(off, r);
      }
    }
  }
  o.require(on > 0.0 || off < std::numeric_limits<double>::infinity(), "no inputs evaluated");
  o.require(std::isfinite(off), "no control input");
  o.note("slant max " + sci(on) + ", control min " + sci(off));
}

void verification(Outcome& o) {
  const auto& ids = tracked_equations();
  o.require(ids.size() == 23 && std::set<std::string>(ids.begin(), ids.end()).size() == 23,
            "tracked ids: " + std::to_string(ids.size()));
  std::size_t passing = 0, flipped = 0, equations_failed = 0;
  for (double g : kPresets) {
    for (int eps : {1, -1}) {
      for (const auto& [name, spec] : bertrand_inputs(g)) {
        const VerificationBundle b = run_full_verification(spec, eps, {}, 7);
        std::ostringstream first, second;
        write_bundle_json(first, b);
        write_bundle_json(second, run_full_verification(spec, eps, {}, 7));
        o.require(first.str() == second.str(), name + " not deterministic");
        o.require(b.equations.size() == ids.size(), name + " equation count");
        for (std::size_t i = 0; i < b.equations.size() && i < ids.size(); ++i) {
          const EquationReport& e = b.equations[i];
          o.require(e.equation == ids[i] && !e.reports.empty(), name + " " + e.equation + " missing");
          o.require(e.verdict != Verdict::Degenerate, name + " " + e.equation + " has no verdict");
          if (e.verdict == Verdict::Fail) ++equations_failed;
          for (const ResidualReport& r : e.reports) {
            if (r.verdict != Verdict::Pass) continue;
            ++passing;
            const bool f = r.negative_control_flipped.value_or(false);
            o.require(f, name + " " + r.id + " control did not flip");
            if (f) ++flipped;
          }
          if (e.equation == "Eq25") {
            bool found = false;
            for (const ResidualReport& r : e.reports) found = found || (r.id == "Eq25-st" && r.verdict != Verdict::Degenerate);
            o.require(found, name + " Eq25-st verdict not recorded");
          }
        }
        for (const ResidualReport& c : b.checks) {
          o.require(c.verdict == Verdict::Pass, name + " oracle self-consistency " + c.id);
        }
      }
    }
  }
  o.note("12 bundles, " + std::to_string(flipped) + "/" + std::to_string(passing) + " controls flipped, " +
         std::to_string(equations_failed) + " recorded equation failures");
}

struct CliOutcome {
  int code;
  std::string err;
};

CliOutcome run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"lieframe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, err.str()};
}

void parser(Outcome& o) {
  std::mt19937_64 rng(42);
  int trips = 0;
  for (int k = 0; k < 1000; ++k) {
    const ExprPtr ast = fixtures::random_tree(rng, 6);
    const std::string text = to_string(*ast);
    const ExprPtr back = parse_expr(text);
    const bool same = structurally_equal(*ast, *back) && to_string(*back) == text;
    o.require(same, "round trip of " + text);
    if (same) ++trips;
  }
  std::mt19937_64 erng(43);
  std::uniform_real_distribution<double> sdist(-3.0, 3.0);
  int agreed = 0;
  for (int k = 0; k < 1000; ++k) {
    const ExprPtr ast = parse_expr(to_string(*fixtures::random_tree(erng, 6)));
    const double s = sdist(erng);
    bool ok = false;
    if (fixtures::all_finite(*ast, s)) {
      const double want = fixtures::oracle_eval(*ast, s);
      ok = std::fabs(eval_expr(*ast, s) - want) <= 4 * std::numeric_limits<double>::epsilon() * std::fabs(want);
    } else {
      ok = fixtures::thrown_code([&] { eval_expr(*ast, s); }) == ErrorCode::DomainError;
    }
    o.require(ok, "evaluation of " + to_string(*ast) + " at s=" + sci(s));
    if (ok) ++agreed;
  }

  const fs::path dir = fs::temp_directory_path() / ("lieframe_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  const auto config = [&](const std::string& file, const std::string& kappa) {
    std::ofstream(dir / file) << R"({"curve": {"kappa": ")" << kappa << R"(", "tau": "0", "domain": [0, 1]}})";
    return (dir / file).string();
  };
  struct Path {
    std::string label;
    std::vector<std::string> args;
    const char* code;
  };
  const Path paths[] = {
      {"missing config", {"--config", (dir / "absent.json").string(), "apparatus"}, "config_not_found"},
      {"syntax error", {"--config", config("syntax.json", "2*^3"), "apparatus"}, "syntax_error"},
      {"domain error", {"--config", config("domain.json", "1/s"), "apparatus"}, "expression_domain_error"},
  };
  for (const Path& p : paths) {
    const CliOutcome r = run_cli(p.args);
    o.require(r.code == 1, p.label + " exit " + std::to_string(r.code));
    o.require(r.err.find(p.code) != std::string::npos, p.label + " stderr lacks " + p.code);
  }
  fs::remove_all(dir);
  o.note(std::to_string(trips) + " round trips, " + std::to_string(agreed) + " evaluations agree, 3 error paths");
}

}  // namespace

int main() {
  const fs::path data = LIEFRAME_DATA_DIR;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"algebra identities", algebra},
      {"circle closure and drift", circle},
      {"apparatus round trip", round_trip},
      {"classification", [&](Outcome& o) { classification(o, data / "regression"); }},
      {"Bertrand detection", bertrand},
      {"mate frame identities", mate_identities},
      {"indicatrix structural identities", structural},
      {"unit-sphere confinement", sphere},
      {"spherical-helix predicate consistency", predicate},
      {"verification bundle", verification},
      {"expression parser", parser},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.ok()) ++failed;
    std::printf("%s %2zu %s: %s\n", o.ok() ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.summary().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
