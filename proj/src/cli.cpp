#include "lieframe/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lieframe/bertrand.hpp"
#include "lieframe/config.hpp"
#include "lieframe/error.hpp"
#include "lieframe/indicatrix.hpp"
#include "lieframe/output.hpp"
#include "lieframe/verify.hpp"

namespace lieframe {

namespace {

struct Options {
  std::string config_path;
  std::optional<std::string> out_path;
  std::optional<std::string> format;
  std::optional<double> tol;
  std::optional<int> epsilon;
  std::optional<std::size_t> samples;
  std::uint64_t seed{0};
  std::optional<std::string> kind;
  bool strict{false};
};

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  err << j.dump() << '\n';
}

RunConfig resolve_config(const Options& opt) {
  RunConfig cfg = load_config(opt.config_path);
  if (opt.tol) {
    if (!(*opt.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
    cfg.tolerances.classify = *opt.tol;
    cfg.tolerances.bertrand = *opt.tol;
  }
  if (opt.epsilon) {
    if (*opt.epsilon != 1 && *opt.epsilon != -1) throw Error(ErrorCode::InvalidArgument, "--epsilon must be 1 or -1");
    cfg.epsilon = *opt.epsilon;
  }
  if (opt.samples) cfg.samples = *opt.samples;
  return cfg;
}

/// Destination stream: --out, then the config's output.path, then stdout.
class Sink {
 public:
  Sink(const Options& opt, const RunConfig& cfg, std::ostream& fallback) : stream_(&fallback) {
    const std::optional<std::string> path = opt.out_path ? opt.out_path : cfg.output_path;
    if (path) {
      file_.open(*path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot open output file '" + *path + "'");
      stream_ = &file_;
      to_file_ = true;
    }
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return to_file_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  bool to_file_{false};
};

std::string resolve_format(const Options& opt, const RunConfig& cfg, const char* fallback) {
  if (opt.format) return *opt.format;
  if (cfg.output_format) return *cfg.output_format;
  return fallback;
}

bool matches(const std::optional<bool>& expected, bool actual) { return !expected || *expected == actual; }

int run_apparatus(const Options& opt, std::ostream& out) {
  const RunConfig cfg = resolve_config(opt);
  const ApparatusField app = integrate_frenet(make_curve_spec(cfg));
  Sink sink(opt, cfg, out);
  if (resolve_format(opt, cfg, "csv") == "json") {
    write_apparatus_json(sink.stream(), app);
  } else {
    write_apparatus_csv(sink.stream(), app);
  }
  return kExitOk;
}

int run_classify(const Options& opt, std::ostream& out) {
  const RunConfig cfg = resolve_config(opt);
  const ApparatusField app = integrate_frenet(make_curve_spec(cfg));
  const HelixClass c = classify(app, cfg.tolerances.classify);
  std::optional<bool> ok;
  if (cfg.expect) {
    ok = matches(cfg.expect->planar, c.planar) && matches(cfg.expect->general_helix, c.general_helix) &&
         matches(cfg.expect->slant_helix, c.slant_helix);
  }
  Sink sink(opt, cfg, out);
  if (resolve_format(opt, cfg, "json") == "csv") {
    write_classification_csv(sink.stream(), c, cfg.tolerances.classify);
  } else {
    write_classification_json(sink.stream(), c, cfg.tolerances.classify, ok);
  }
  return kExitOk;
}

int run_bertrand(const Options& opt, std::ostream& out) {
  const RunConfig cfg = resolve_config(opt);
  const ApparatusField app = integrate_frenet(make_curve_spec(cfg));
  const BertrandReport report = check_bertrand(app, cfg.epsilon, cfg.tolerances.bertrand);
  const MateApparatus mate = mate_apparatus(app, cfg.epsilon);
  std::optional<bool> ok;
  if (cfg.expect) ok = matches(cfg.expect->is_pair, report.is_pair);
  Sink sink(opt, cfg, out);
  if (resolve_format(opt, cfg, "json") == "csv") {
    write_mate_csv(sink.stream(), report, mate);
  } else {
    write_bertrand_json(sink.stream(), report, &mate, ok);
  }
  return kExitOk;
}

int run_indicatrix(const Options& opt, std::ostream& out) {
  const RunConfig cfg = resolve_config(opt);
  const IndicatrixKind kind = parse_indicatrix_kind(*opt.kind);
  const ApparatusField app = integrate_frenet(make_curve_spec(cfg));
  const IndicatrixApparatus ind = indicatrix(app, kind, cfg.epsilon);
  Sink sink(opt, cfg, out);
  if (resolve_format(opt, cfg, "csv") == "json") {
    write_indicatrix_json(sink.stream(), ind);
  } else {
    write_indicatrix_csv(sink.stream(), ind);
  }
  return kExitOk;
}

int run_sphere_export(const Options& opt, std::ostream& out) {
  const RunConfig cfg = resolve_config(opt);
  std::vector<IndicatrixKind> kinds{IndicatrixKind::Tangent, IndicatrixKind::Normal, IndicatrixKind::Binormal};
  if (opt.kind) kinds = {parse_indicatrix_kind(*opt.kind)};
  const ApparatusField app = integrate_frenet(make_curve_spec(cfg));
  std::vector<IndicatrixApparatus> images;
  for (IndicatrixKind k : kinds) images.push_back(indicatrix(app, k, cfg.epsilon));
  Sink sink(opt, cfg, out);
  if (resolve_format(opt, cfg, "csv") == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& ind : images) {
      nlohmann::ordered_json e;
      e["kind"] = std::string(indicatrix_name(ind.kind));
      e["s"] = ind.grid.values();
      nlohmann::ordered_json pts = nlohmann::ordered_json::array();
      for (const auto& p : ind.curve) {
        pts.push_back(std::isfinite(p.x1) && std::isfinite(p.x2) && std::isfinite(p.x3)
                          ? nlohmann::ordered_json::array({p.x1, p.x2, p.x3})
                          : nlohmann::ordered_json(nullptr));
      }
      e["points"] = pts;
      j.push_back(e);
    }
    sink.stream() << j.dump(2) << '\n';
  } else {
    write_sphere_header(sink.stream());
    for (const auto& ind : images) write_sphere_rows(sink.stream(), ind);
  }
  return kExitOk;
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve_config(opt);
  const VerificationBundle bundle =
      run_full_verification(make_curve_spec(cfg), cfg.epsilon, cfg.tolerances, opt.seed);
  Sink sink(opt, cfg, out);
  if (resolve_format(opt, cfg, "json") == "csv") {
    write_bundle_csv(sink.stream(), bundle);
  } else {
    write_bundle_json(sink.stream(), bundle);
  }
  write_bundle_table(sink.to_file() ? out : err, bundle);
  if (opt.strict && !bundle.all_passed()) return kExitVerifyFailed;
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frenet apparatus, Bertrand pairs and spherical indicatrices in 3-D Lie groups", "lieframe"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "JSON run configuration")->required();
  app.add_option("--out", opt.out_path, "output file (default: stdout)");
  app.add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", opt.tol, "classification and pair-test tolerance");
  app.add_option("--epsilon", opt.epsilon, "normal sign, 1 or -1");
  app.add_option("--samples", opt.samples, "grid sample count (>= 9)");
  app.add_option("--seed", opt.seed, "seed for randomized checks");

  CLI::App* apparatus = app.add_subcommand("apparatus", "sampled Frenet apparatus of the configured curve");
  CLI::App* classify_cmd = app.add_subcommand("classify", "planar / general helix / slant helix verdicts");
  CLI::App* bertrand = app.add_subcommand("bertrand", "Bertrand pair test and partner apparatus");
  CLI::App* ind = app.add_subcommand("indicatrix", "closed-form apparatus of one spherical indicatrix");
  ind->add_option("--kind", opt.kind, "t, n or b")->required();
  CLI::App* verify = app.add_subcommand("verify", "residual bundle against finite-difference oracles");
  verify->add_flag("--strict", opt.strict, "exit 3 unless every report passes");
  CLI::App* sphere = app.add_subcommand("sphere-export", "indicatrix points on the unit sphere");
  sphere->add_option("--kind", opt.kind, "t, n or b (default: all three)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "invalid_argument", e.what());
    return kExitValidation;
  }

  try {
    if (*apparatus) return run_apparatus(opt, out);
    if (*classify_cmd) return run_classify(opt, out);
    if (*bertrand) return run_bertrand(opt, out);
    if (*ind) return run_indicatrix(opt, out);
    if (*verify) return run_verify(opt, out, err);
    if (*sphere) return run_sphere_export(opt, out);
  } catch (const Error& e) {
    write_error(err, error_code_name(e.code()), e.what());
    return is_geometry_error(e.code()) ? kExitGeometry : kExitValidation;
  } catch (const std::exception& e) {
    write_error(err, "internal_error", e.what());
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace lieframe
