#include "lieframe/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lieframe/error.hpp"
#include "lieframe/expr.hpp"

namespace lieframe {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (allowed.count(key) == 0) invalid("unknown key '" + key + "' in " + where);
  }
}

const json& require_object(const json& parent, const char* key, const std::string& where) {
  if (!parent.contains(key)) invalid("missing '" + std::string(key) + "' in " + where);
  const json& v = parent.at(key);
  if (!v.is_object()) invalid("'" + std::string(key) + "' in " + where + " must be an object");
  return v;
}

double number_at(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) invalid("'" + std::string(key) + "' in " + where + " must be a number");
  return v.get<double>();
}

double positive_number_at(const json& obj, const char* key, const std::string& where) {
  const double v = number_at(obj, key, where);
  if (!(v > 0.0) || !std::isfinite(v)) invalid("'" + std::string(key) + "' in " + where + " must be positive");
  return v;
}

std::string string_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) invalid("missing '" + std::string(key) + "' in " + where);
  const json& v = obj.at(key);
  if (!v.is_string()) invalid("'" + std::string(key) + "' in " + where + " must be a string");
  return v.get<std::string>();
}

AlgebraVector vector_at(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 3) invalid("initial_frame." + std::string(key) + " must be an array of 3 numbers");
  for (const auto& x : v) {
    if (!x.is_number()) invalid("initial_frame." + std::string(key) + " must be an array of 3 numbers");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

std::optional<bool> optional_bool(const json& obj, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  if (!obj.at(key).is_boolean()) invalid("expect." + std::string(key) + " must be a boolean");
  return obj.at(key).get<bool>();
}

void read_structure(const json& root, RunConfig& cfg) {
  if (!root.contains("structure")) return;
  const json& st = require_object(root, "structure", "config");
  reject_unknown_keys(st, {"preset", "tau_G"}, "structure");
  const bool has_preset = st.contains("preset");
  const bool has_value = st.contains("tau_G");
  if (has_preset == has_value) invalid("structure needs exactly one of 'preset' or 'tau_G'");
  if (has_preset) {
    cfg.structure_name = string_at(st, "preset", "structure");
    try {
      cfg.structure = preset_structure(cfg.structure_name);
    } catch (const Error& e) {
      invalid(e.what());
    }
  } else {
    const double t = number_at(st, "tau_G", "structure");
    if (!std::isfinite(t)) invalid("structure.tau_G must be finite");
    cfg.structure_name = "custom";
    cfg.structure = LieStructure{t};
  }
}

void read_curve(const json& root, RunConfig& cfg) {
  const json& c = require_object(root, "curve", "config");
  reject_unknown_keys(c, {"kappa", "tau", "domain", "samples", "initial_frame"}, "curve");
  cfg.kappa_expr = string_at(c, "kappa", "curve");
  cfg.tau_expr = string_at(c, "tau", "curve");
  if (!c.contains("domain")) invalid("missing 'domain' in curve");
  const json& d = c.at("domain");
  if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number()) {
    invalid("curve.domain must be [s0, s1]");
  }
  cfg.s0 = d[0].get<double>();
  cfg.s1 = d[1].get<double>();
  if (!(cfg.s1 > cfg.s0) || !std::isfinite(cfg.s0) || !std::isfinite(cfg.s1)) {
    invalid("curve.domain must satisfy s0 < s1");
  }
  if (c.contains("samples")) {
    const json& n = c.at("samples");
    if (!n.is_number_integer() || n.get<long long>() < static_cast<long long>(Grid::kMinSamples)) {
      invalid("curve.samples must be an integer >= 9");
    }
    cfg.samples = n.get<std::size_t>();
  }
  if (c.contains("initial_frame")) {
    const json& f = c.at("initial_frame");
    if (!f.is_object()) invalid("curve.initial_frame must be an object");
    reject_unknown_keys(f, {"T", "N", "B"}, "curve.initial_frame");
    if (!f.contains("T") || !f.contains("N") || !f.contains("B")) invalid("curve.initial_frame needs T, N and B");
    cfg.initial_frame = Frame{vector_at(f, "T"), vector_at(f, "N"), vector_at(f, "B")};
  }
}

void read_tolerance(const json& root, RunConfig& cfg) {
  if (!root.contains("tolerance")) return;
  const json& t = require_object(root, "tolerance", "config");
  reject_unknown_keys(t, {"classify", "bertrand", "algebraic", "first_derivative", "second_derivative"}, "tolerance");
  ToleranceProfile& p = cfg.tolerances;
  if (t.contains("classify")) p.classify = positive_number_at(t, "classify", "tolerance");
  if (t.contains("bertrand")) p.bertrand = positive_number_at(t, "bertrand", "tolerance");
  if (t.contains("algebraic")) p.algebraic = positive_number_at(t, "algebraic", "tolerance");
  if (t.contains("first_derivative")) p.first_derivative = positive_number_at(t, "first_derivative", "tolerance");
  if (t.contains("second_derivative")) p.second_derivative = positive_number_at(t, "second_derivative", "tolerance");
}

void read_output(const json& root, RunConfig& cfg) {
  if (!root.contains("output")) return;
  const json& o = require_object(root, "output", "config");
  reject_unknown_keys(o, {"path", "format"}, "output");
  if (o.contains("path")) cfg.output_path = string_at(o, "path", "output");
  if (o.contains("format")) {
    const std::string f = string_at(o, "format", "output");
    if (f != "csv" && f != "json") invalid("output.format must be 'csv' or 'json'");
    cfg.output_format = f;
  }
}

void read_expect(const json& root, RunConfig& cfg) {
  if (!root.contains("expect")) return;
  const json& e = require_object(root, "expect", "config");
  reject_unknown_keys(e, {"planar", "general_helix", "slant_helix", "is_pair"}, "expect");
  cfg.expect = Expectation{optional_bool(e, "planar"), optional_bool(e, "general_helix"),
                           optional_bool(e, "slant_helix"), optional_bool(e, "is_pair")};
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) invalid("config root must be an object");
  reject_unknown_keys(root, {"structure", "curve", "epsilon", "tolerance", "output", "expect", "description"},
                      "config");

  RunConfig cfg;
  try {
    read_structure(root, cfg);
    read_curve(root, cfg);
    if (root.contains("epsilon")) {
      const json& e = root.at("epsilon");
      if (!e.is_number_integer() || (e.get<long long>() != 1 && e.get<long long>() != -1)) {
        invalid("epsilon must be 1 or -1");
      }
      cfg.epsilon = e.get<int>();
    }
    read_tolerance(root, cfg);
    read_output(root, cfg);
    read_expect(root, cfg);
  } catch (const json::exception& e) {
    invalid(std::string("invalid config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigNotFound, "cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ScalarFunction compile_expression(std::string_view text) {
  ExprPtr ast = parse_expr(text);
  return [ast](double s) { return eval_expr(*ast, s); };
}

CurveSpec make_curve_spec(const RunConfig& config) {
  return CurveSpec{compile_expression(config.kappa_expr), compile_expression(config.tau_expr),
                   Grid(config.s0, config.s1, config.samples), config.structure, config.initial_frame};
}

}  // namespace lieframe
