#include "autospec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "autospec/normalform.hpp"
#include "autospec/numerics.hpp"

namespace autospec::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kCloudSamples = 360;

ojson complex_json(Complex z) {
  ojson j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

ojson automorphism_json(const DiskAutomorphism& phi) {
  ojson j;
  j["lambda"] = complex_json(phi.lambda());
  j["a"] = complex_json(phi.a());
  return j;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw InputError("cannot parse " + what + " from '" + text + "'");
  return v;
}

long parse_long(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw InputError("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw InputError("cannot parse " + what + " from '" + text + "'");
  return v;
}

Complex read_complex(const ojson& j, const char* key) {
  if (!j.contains(key) || !j[key].is_object() || !j[key].contains("re") || !j[key].contains("im") ||
      !j[key]["re"].is_number() || !j[key]["im"].is_number()) {
    throw InputError(std::string("input field '") + key + "' must be {\"re\": number, \"im\": number}");
  }
  return {j[key]["re"].get<double>(), j[key]["im"].get<double>()};
}

ParsedInput parse_preset(const std::string& name) {
  ParsedInput in;
  in.echo["preset"] = name;
  if (name == "psi1") {
    in.phi = psi1();
  } else if (name == "psi2") {
    in.phi = psi2();
  } else if (name.rfind("psi_r:", 0) == 0) {
    const double r = parse_double(name.substr(6), "r");
    if (!(r > 0.0 && r < 1.0)) throw InputError("psi_r needs r in (0, 1)");
    in.phi = psi_r(r);
  } else if (name.rfind("rotation:", 0) == 0) {
    const std::string frac = name.substr(9);
    const auto slash = frac.find('/');
    if (slash == std::string::npos) throw InputError("rotation preset must be rotation:<num>/<den>");
    const long num = parse_long(frac.substr(0, slash), "num");
    const long den = parse_long(frac.substr(slash + 1), "den");
    if (den <= 0) throw InputError("rotation denominator must be positive");
    const AngleFraction angle = AngleFraction{num, den}.reduced();
    if (angle.num == 0) throw InputError("rotation:0 is the identity map");
    in.phi = DiskAutomorphism::rotation(angle.value());
    in.exact_multiplier_angle = angle;
  } else {
    throw InputError("unknown preset '" + name + "'");
  }
  return in;
}

ParsedInput parse_object(const ojson& j) {
  if (!j.is_object()) throw InputError("input JSON must be an object");
  if (j.contains("preset")) {
    if (!j["preset"].is_string()) throw InputError("preset must be a string");
    return parse_preset(j["preset"].get<std::string>());
  }
  ParsedInput in;
  in.echo = j;
  const Complex a = read_complex(j, "a");
  try {
    if (j.contains("lambda_angle")) {
      const ojson& ang = j["lambda_angle"];
      if (!ang.is_object() || !ang.contains("num") || !ang.contains("den") || !ang["num"].is_number_integer() ||
          !ang["den"].is_number_integer()) {
        throw InputError("lambda_angle must be {\"num\": integer, \"den\": integer}");
      }
      const long den = ang["den"].get<long>();
      if (den <= 0) throw InputError("lambda_angle denominator must be positive");
      const AngleFraction angle{ang["num"].get<long>(), den};
      in.phi = DiskAutomorphism::make(angle.value(), a);
      if (a == Complex{}) {
        // phi(z) = -lambda z, so the multiplier angle shifts by one half turn.
        in.exact_multiplier_angle = AngleFraction{2 * angle.num + angle.den, 2 * angle.den}.reduced();
      }
    } else {
      in.phi = DiskAutomorphism::make(read_complex(j, "lambda"), a);
    }
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  return in;
}

ojson tolerances_json(const Tolerances& tol) {
  ojson j = ojson::object();
  for (const auto& [k, v] : tol.as_map()) {
    if (k == "m_max") {
      j[k] = static_cast<long>(v);
    } else {
      j[k] = v;
    }
  }
  return j;
}

ojson fixed_points_json(const FixedPoints& fp) {
  ojson arr = ojson::array();
  for (const auto& p : fp.points) {
    if (p.at_infinity) {
      arr.push_back(ojson{{"infinity", true}});
    } else {
      arr.push_back(complex_json(p.value));
    }
  }
  return arr;
}

ojson classification_json(const DiskAutomorphism& phi, const Classification& cls, const ParsedInput& in,
                          const Tolerances& tol) {
  ojson j;
  j["kind"] = to_string(cls.kind());
  switch (cls.kind()) {
    case AutomorphismKind::Elliptic: {
      const auto& e = cls.elliptic();
      j["fixed_point"] = complex_json(e.fixed_point);
      j["multiplier"] = complex_json(e.multiplier);
      const RotationOrder order = in.exact_multiplier_angle
                                      ? rotation_order(*in.exact_multiplier_angle)
                                      : rotation_order(e.multiplier / std::abs(e.multiplier), tol.rotation_order, tol.m_max);
      if (order.infinite()) {
        j["order"] = "infinite";
      } else {
        j["order"] = *order.order;
      }
      j["order_exactness"] = order.exactness == Exactness::ExactRational ? "exact_rational" : "numeric_detection";
      break;
    }
    case AutomorphismKind::Parabolic: {
      const auto& p = cls.parabolic();
      j["fixed_point"] = complex_json(p.fixed_point);
      j["translation_sign"] = p.translation_sign;
      break;
    }
    case AutomorphismKind::Hyperbolic: {
      const auto& h = cls.hyperbolic();
      j["attracting"] = complex_json(h.attracting);
      j["repelling"] = complex_json(h.repelling);
      j["multiplier"] = h.attracting_multiplier;
      j["repelling_multiplier"] = h.repelling_multiplier;
      break;
    }
  }
  const FixedPoints fp = fixed_points(phi, tol);
  j["fixed_points"] = fixed_points_json(fp);
  j["multiplicity_two"] = fp.multiplicity_two;
  j["trace_discriminant"] = trace_discriminant(phi);
  return j;
}

ojson normal_form_json(const NormalForm& nf, const Tolerances& tol) {
  ojson j;
  j["kind"] = to_string(nf.kind);
  switch (nf.kind) {
    case NormalKind::Rotation: j["parameter"] = complex_json(nf.rotation); break;
    case NormalKind::ParabolicPlus: j["parameter"] = 1; break;
    case NormalKind::ParabolicMinus: j["parameter"] = -1; break;
    case NormalKind::Hyperbolic: j["parameter"] = nf.r; break;
  }
  if (nf.kind == NormalKind::ParabolicPlus || nf.kind == NormalKind::ParabolicMinus) {
    j["chart_translation"] = nf.translation;
  }
  j["symbol"] = automorphism_json(nf.symbol());
  j["conjugator"] = automorphism_json(nf.conjugator);
  j["conjugacy_residual"] = nf.residual;
  j["conjugacy_tolerance"] = tol.conjugacy;
  return j;
}

ojson prediction_json(const SpectrumPrediction& p) {
  ojson j;
  j["kind"] = to_string(p.kind);
  switch (p.kind) {
    case PredictionKind::UnitCircle: break;
    case PredictionKind::FiniteCyclicGroup: {
      j["generator"] = complex_json(p.generator);
      j["order"] = p.order;
      ojson els = ojson::array();
      for (Complex e : p.elements) els.push_back(complex_json(e));
      j["elements"] = els;
      break;
    }
    case PredictionKind::Annulus:
    case PredictionKind::AnnulusLowerBound:
      j["r_in"] = p.r_in;
      j["r_out"] = p.r_out;
      break;
  }
  return j;
}

ojson report_header(const std::string& command, const ParsedInput& in) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["input"] = in.echo;
  j["automorphism"] = automorphism_json(in.phi);
  return j;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Eigenfunction make_family_member(const std::string& family, const std::string& param) {
  Eigenfunction f;
  if (family == "monomial") {
    const long k = parse_long(param, "monomial degree");
    f = Monomial{static_cast<int>(k)};
  } else if (family == "expcusp") {
    f = ExpCusp{parse_double(param, "s")};
  } else if (family == "logpower") {
    f = LogPower{parse_double(param, "t")};
  } else {
    throw InputError("unknown family '" + family + "'");
  }
  try {
    validate(f);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  return f;
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  const std::string stem = p.stem().string();
  const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
  return (p.parent_path() / (stem + suffix + ext)).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot open '" + path + "' for writing");
  os << text;
}

struct Options {
  std::string input;
  std::string space = "X";
  std::string family;
  std::string params;
  int N = 64;
  std::string weights = "h2";
  int n_powers = 64;
  int grid_depth = 12;
  std::string format = "json";
  std::string out;
  std::vector<std::string> tol_overrides;
  std::optional<double> s;
  std::optional<double> t;
  double x0 = -1.0;
  long n_max = 1000000;
  int max_k = 40;
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& message) : Error("VerificationFailure", message) {}
};

Tolerances build_tolerances(const Options& o) {
  Tolerances tol;
  for (const std::string& item : o.tol_overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("tolerance override must be key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (!tol.set(key, parse_double(item.substr(eq + 1), key))) {
      throw InputError("unknown tolerance '" + key + "'");
    }
  }
  return tol;
}

PredictOptions predict_options(const ParsedInput& in, const Tolerances& tol) {
  PredictOptions po;
  po.exact_multiplier_angle = in.exact_multiplier_angle;
  po.order_tol = tol.rotation_order;
  po.m_max = tol.m_max;
  return po;
}

ParsedInput require_input(const Options& o) {
  if (o.input.empty()) throw InputError("--input is required");
  return parse_input(o.input);
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Tolerances tol = build_tolerances(o);
  const ParsedInput in = require_input(o);
  const Classification cls = classify(in.phi, tol);
  ojson r = report_header("classify", in);
  r["classification"] = classification_json(in.phi, cls, in, tol);
  r["tolerances"] = tolerances_json(tol);
  out << format_json(r);
  return kOk;
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  const Tolerances tol = build_tolerances(o);
  const ParsedInput in = require_input(o);
  const Classification cls = classify(in.phi, tol);
  const NormalForm nf = normal_form(in.phi, cls, tol);
  ojson r = report_header("normal-form", in);
  r["classification"] = classification_json(in.phi, cls, in, tol);
  r["normal_form"] = normal_form_json(nf, tol);
  r["tolerances"] = tolerances_json(tol);
  out << format_json(r);
  return kOk;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const Tolerances tol = build_tolerances(o);
  const ParsedInput in = require_input(o);
  SpaceDescriptor space;
  try {
    space = SpaceDescriptor::parse(o.space);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  if (o.format != "json" && o.format != "csv") throw InputError("--format must be json or csv");
  const Classification cls = classify(in.phi, tol);
  const SpectrumPrediction pred = predict_spectrum(cls, space, predict_options(in, tol));

  if (o.format == "csv") {
    std::string csv = "re,im\n";
    for (Complex z : pred.sample(kCloudSamples)) {
      csv += format_float(z.real()) + "," + format_float(z.imag()) + "\n";
    }
    if (o.out.empty()) {
      out << csv;
    } else {
      write_text(o.out, csv);
    }
    return kOk;
  }

  ojson r = report_header("predict", in);
  r["classification"] = classification_json(in.phi, cls, in, tol);
  r["space"] = space.name();
  r["prediction"] = prediction_json(pred);
  if (cls.kind() == AutomorphismKind::Hyperbolic && space.kind == SpaceKind::Hardy) {
    r["spectral_radius"] = hardy_spectral_radius(cls, space.p);
  }
  r["tolerances"] = tolerances_json(tol);
  out << format_json(r);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Tolerances tol = build_tolerances(o);
  const ParsedInput in = require_input(o);
  const auto params = split_list(o.params);
  if (params.empty()) throw InputError("--params must list at least one value");
  if (o.grid_depth < 1) throw InputError("--grid-depth must be >= 1");
  std::vector<Eigenfunction> members;
  for (const auto& p : params) members.push_back(make_family_member(o.family, p));

  const Classification cls = classify(in.phi, tol);
  const NormalForm nf = normal_form(in.phi, cls, tol);
  const DiskAutomorphism psi = nf.symbol();
  const GridSchedule grid{o.grid_depth, 32};
  const auto points = grid.points();

  ojson results = ojson::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Eigenfunction& f = members[i];
    const Complex mu = predicted_eigenvalue(nf, f);
    const double residual = eigen_residual(psi, f, mu, grid);
    // f o tau is the matching eigenfunction of C_phi itself.
    double transported = 0.0;
    for (const Complex z : points) {
      const Complex lhs = eval_eigenfunction(f, nf.conjugator(in.phi(z)));
      transported = std::max(transported, std::abs(lhs - mu * eval_eigenfunction(f, nf.conjugator(z))));
    }
    const bool pass = residual < tol.eigen_verify && transported < tol.eigen_verify;
    all_pass = all_pass && pass;
    ojson item;
    item["param"] = std::holds_alternative<Monomial>(f) ? ojson(std::get<Monomial>(f).k) : ojson(parse_double(params[i], "param"));
    item["eigenvalue"] = complex_json(mu);
    item["residual"] = residual;
    item["transported_residual"] = transported;
    item["tolerance"] = tol.eigen_verify;
    item["pass"] = pass;
    results.push_back(item);
  }

  ojson r = report_header("verify", in);
  r["classification"] = classification_json(in.phi, cls, in, tol);
  r["normal_form"] = normal_form_json(nf, tol);
  r["family"] = o.family;
  r["grid_depth"] = o.grid_depth;
  r["results"] = results;
  r["all_pass"] = all_pass;
  r["tolerances"] = tolerances_json(tol);
  out << format_json(r);
  if (!all_pass) throw VerificationFailed("eigen-identity residual above tolerance");
  return kOk;
}

int cmd_truncate(const Options& o, std::ostream& out) {
  const Tolerances tol = build_tolerances(o);
  const ParsedInput in = require_input(o);
  if (o.N < 1 || o.N > 511) throw InputError("--N must lie in [1, 511]");
  if (o.n_powers < 1) throw InputError("--n-powers must be >= 1");
  std::vector<double> weights;
  if (o.weights == "h2") {
    weights = h2_weights(o.N);
  } else if (o.weights.rfind("bergman:", 0) == 0) {
    const double alpha = parse_double(o.weights.substr(8), "alpha");
    if (!(alpha > -1.0)) throw InputError("bergman weights need alpha > -1");
    weights = bergman_weights(o.N, alpha);
  } else {
    throw InputError("--weights must be h2 or bergman:<alpha>");
  }

  const TruncatedOperator T = truncated_matrix(in.phi, o.N, std::move(weights));
  const std::vector<Complex> eigs = truncation_eigenvalues(T);
  const SpectralRadiusEstimate est = spectral_radius_estimate(T, o.n_powers, tol);

  double max_abs = 0.0;
  ojson cloud = ojson::array();
  std::string eig_csv = "re,im\n";
  for (Complex z : eigs) {
    max_abs = std::max(max_abs, std::abs(z));
    cloud.push_back(complex_json(z));
    eig_csv += format_float(z.real()) + "," + format_float(z.imag()) + "\n";
  }
  std::string radius_csv = "n,estimate\n";
  ojson seq = ojson::array();
  for (std::size_t n = 0; n < est.sequence.size(); ++n) {
    seq.push_back(est.sequence[n]);
    radius_csv += std::to_string(n + 1) + "," + format_float(est.sequence[n]) + "\n";
  }

  ojson numerics;
  numerics["N"] = o.N;
  numerics["weights_model"] = o.weights;
  numerics["n_powers"] = o.n_powers;
  numerics["max_abs_eigenvalue"] = max_abs;
  numerics["spectral_radius_estimate"] = est.estimate;
  ojson tail = ojson::array();
  for (std::size_t n = est.sequence.size() >= 4 ? est.sequence.size() - 4 : 0; n < est.sequence.size(); ++n) {
    tail.push_back(est.sequence[n]);
  }
  numerics["estimate_tail"] = tail;
  numerics["spectral_radius_sequence"] = seq;
  numerics["eigenvalues"] = cloud;
  if (!o.out.empty()) {
    const std::string radius_path = sibling_path(o.out, "_radius");
    write_text(o.out, eig_csv);
    write_text(radius_path, radius_csv);
    numerics["eigenvalues_csv"] = o.out;
    numerics["radius_csv"] = radius_path;
  }

  ojson r = report_header("truncate", in);
  r["numerics"] = numerics;
  r["tolerances"] = tolerances_json(tol);
  out << format_json(r);
  return kOk;
}

int cmd_little_bloch(const Options& o, std::ostream& out) {
  const Tolerances tol = build_tolerances(o);
  if (o.s.has_value() == o.t.has_value()) throw InputError("give exactly one of --s or --t");
  ojson lb;
  if (o.s) {
    const double s = *o.s;
    if (!(s > 0.0)) throw InputError("--s must be > 0 (f_0 is constant)");
    if (!(o.x0 < 0.0)) throw InputError("--x0 must be < 0");
    if (o.n_max < 10) throw InputError("--n-max must be >= 10");
    const double value = little_bloch_sequence_limit(s, o.x0, o.n_max);
    const double closed = -2.0 * s * o.x0 * std::exp(s * o.x0);
    lb["family"] = "expcusp";
    lb["s"] = s;
    lb["x0"] = o.x0;
    lb["n_max"] = o.n_max;
    lb["value"] = value;
    lb["closed_form"] = closed;
    lb["abs_error"] = std::abs(value - closed);
    lb["tolerance"] = tol.cauchy_tail;
  } else {
    const double t = *o.t;
    if (t == 0.0) throw InputError("--t must be non-zero (f_0 is constant)");
    if (o.max_k < 2 || o.max_k > 52) throw InputError("--max-k must lie in [2, 52]");
    const LimitEstimate est = little_bloch_radial_limit(LogPower{t}, o.max_k, tol);
    // Along the reals (1+r)/(1-r) > 0, so |f_t(r)| = 1.
    const double closed = 2.0 * std::abs(t);
    lb["family"] = "logpower";
    lb["t"] = t;
    lb["max_k"] = o.max_k;
    lb["value"] = est.value;
    lb["closed_form"] = closed;
    lb["abs_error"] = std::abs(est.value - closed);
    lb["tolerance"] = tol.cauchy_tail;
    ojson it = ojson::array();
    for (double v : est.iterates) it.push_back(v);
    lb["iterates"] = it;
  }
  ojson r;
  r["schema_version"] = kSchemaVersion;
  r["tool_version"] = kToolVersion;
  r["command"] = "little-bloch";
  r["little_bloch"] = lb;
  r["tolerances"] = tolerances_json(tol);
  out << format_json(r);
  return kOk;
}

void write_error(std::ostream& err, const std::string& code, const std::string& message, int exit_code) {
  ojson e;
  e["error"] = code;
  e["message"] = message;
  e["exit_code"] = exit_code;
  err << e.dump() << "\n";
}

int exit_code_for(const Error& e) {
  const std::string& c = e.code();
  if (c == "InputError" || c == "DomainError" || c == "PairingError") return kUsage;
  if (c == "IdentityError") return kIdentity;
  if (c == "VerificationFailure") return kVerificationFailed;
  if (c == "ConvergenceError") return kEigensolver;
  return kInternal;
}

void format_into(const ojson& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case ojson::value_t::number_float:
      if (std::isfinite(v.get<double>())) {
        out += format_float(v.get<double>());
      } else {
        out += "null";
      }
      break;
    case ojson::value_t::object: {
      if (v.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + ojson(it.key()).dump() + ": ";
        format_into(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      break;
    }
    case ojson::value_t::array: {
      if (v.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        format_into(item, out, indent + 1);
      }
      out += "\n" + pad + "]";
      break;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (trimmed.empty()) throw InputError("empty input");
  if (trimmed.front() == '{') {
    ojson j;
    try {
      j = ojson::parse(trimmed);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("invalid input JSON: ") + e.what());
    }
    return parse_object(j);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(trimmed, ec)) {
    std::ifstream is(trimmed);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_input(ss.str().empty() ? std::string(" ") : ss.str());
  }
  return parse_preset(trimmed);
}

std::string format_float(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", value);
  return buf;
}

std::string format_json(const nlohmann::ordered_json& value) {
  std::string out;
  format_into(value, out, 0);
  out += "\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disk automorphisms and the spectra of their composition operators", "autospec"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("--input", o.input, "Automorphism as JSON, a JSON file, or a preset");
    if (needs_input) opt->required();
    sub->add_option("--tol-override", o.tol_overrides, "Override a tolerance, key=value")->take_all();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Fixed points and class of the automorphism");
  add_common(classify_cmd, true);

  auto* nf_cmd = app.add_subcommand("normal-form", "Normal form and conjugator");
  add_common(nf_cmd, true);

  auto* predict_cmd = app.add_subcommand("predict", "Spectrum prediction on a function space");
  add_common(predict_cmd, true);
  predict_cmd->add_option("--space", o.space, "X | hardy:<p> | bergman:<p>:<alpha> | wbanach:<p> | dirichlet");
  predict_cmd->add_option("--format", o.format, "json | csv");
  predict_cmd->add_option("--out", o.out, "CSV output path (csv format)");

  auto* verify_cmd = app.add_subcommand("verify", "Check eigenfunction identities on a grid");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--family", o.family, "monomial | expcusp | logpower")->required();
  verify_cmd->add_option("--params", o.params, "Comma-separated family parameters")->required();
  verify_cmd->add_option("--grid-depth", o.grid_depth, "Number of concentric circles");

  auto* trunc_cmd = app.add_subcommand("truncate", "Finite section of the composition operator");
  add_common(trunc_cmd, true);
  trunc_cmd->add_option("--N", o.N, "Truncation order (<= 511)");
  trunc_cmd->add_option("--weights", o.weights, "h2 | bergman:<alpha>");
  trunc_cmd->add_option("--n-powers", o.n_powers, "Number of matrix powers for the radius estimate");
  trunc_cmd->add_option("--out", o.out, "Eigenvalue CSV path; the radius sequence goes next to it");

  auto* lb_cmd = app.add_subcommand("little-bloch", "Boundary limits showing f_s, f_t are not in B_0");
  add_common(lb_cmd, false);
  lb_cmd->add_option("--s", o.s, "Cusp parameter s > 0");
  lb_cmd->add_option("--t", o.t, "Log-power parameter t != 0");
  lb_cmd->add_option("--x0", o.x0, "Horizontal offset of the boundary sequence (< 0)");
  lb_cmd->add_option("--n-max", o.n_max, "Sequence index at which the tail is read");
  lb_cmd->add_option("--max-k", o.max_k, "Radial iterates r = 1 - 2^-k, k <= max_k");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what(), kUsage);
    return kUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (nf_cmd->parsed()) return cmd_normal_form(o, out);
    if (predict_cmd->parsed()) return cmd_predict(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (trunc_cmd->parsed()) return cmd_truncate(o, out);
    if (lb_cmd->parsed()) return cmd_little_bloch(o, out);
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    write_error(err, e.code(), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    write_error(err, "InternalError", e.what(), kInternal);
    return kInternal;
  }
  write_error(err, "UsageError", "no subcommand", kUsage);
  return kUsage;
}

}  // namespace autospec::cli
