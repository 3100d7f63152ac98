#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "autospec/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = autospec::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return read_file(std::filesystem::path(AUTOSPEC_GOLDEN_DIR) / name); }

json error_object(const CliResult& r) {
  REQUIRE(!r.err.empty());
  CHECK(r.err.find('\n') == r.err.size() - 1);
  return json::parse(r.err);
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "autospec_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli goldens") {
  const std::pair<std::vector<std::string>, std::string> cases[] = {
      {{"classify", "--input", "psi_r:0.5"}, "classify_psi_r.json"},
      {{"classify", "--input", "psi1"}, "classify_psi1.json"},
      {{"classify", "--input", "rotation:1/3"}, "classify_rotation.json"},
      {{"normal-form", "--input", "psi2"}, "normal_form_psi2.json"},
      {{"predict", "--input", "psi_r:0.5", "--space", "hardy:2"}, "predict_psi_r_hardy.json"},
      {{"predict", "--input", "rotation:1/3", "--space", "X"}, "predict_rotation.json"},
  };
  for (const auto& [args, file] : cases) {
    CAPTURE(file);
    const CliResult r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == golden(file));
  }
}

TEST_CASE("cli classify content") {
  const json h = json::parse(run_cli({"classify", "--input", "psi_r:0.5"}).out);
  CHECK(h["schema_version"] == "1");
  CHECK(h["classification"]["kind"] == "hyperbolic");
  CHECK(h["classification"]["attracting"]["re"].get<double>() == doctest::Approx(1.0));
  CHECK(h["classification"]["repelling"]["re"].get<double>() == doctest::Approx(-1.0));
  CHECK(h["classification"]["multiplier"].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(h.contains("tolerances"));

  const json p = json::parse(run_cli({"classify", "--input", "psi1"}).out);
  CHECK(p["classification"]["kind"] == "parabolic");
  CHECK(p["classification"]["fixed_point"]["re"].get<double>() == doctest::Approx(1.0));

  const json e = json::parse(run_cli({"classify", "--input", "rotation:1/3"}).out);
  CHECK(e["classification"]["kind"] == "elliptic");
  CHECK(e["classification"]["order"] == 3);
  CHECK(e["classification"]["order_exactness"] == "exact_rational");

  const json a = json::parse(
      run_cli({"classify", "--input", R"({"lambda_angle": {"num": 1, "den": 6}, "a": {"re": 0, "im": 0}})"}).out);
  // z -> -e^{i pi / 3} z has multiplier e^{4 pi i / 3}, order 3.
  CHECK(a["classification"]["order"] == 3);
  CHECK(a["classification"]["order_exactness"] == "exact_rational");
}

TEST_CASE("cli round trip through explicit parameters") {
  for (const char* preset : {"psi1", "psi2", "psi_r:0.25", "rotation:2/7"}) {
    CAPTURE(preset);
    const json first = json::parse(run_cli({"classify", "--input", preset}).out);
    json explicit_input;
    explicit_input["lambda"] = first["automorphism"]["lambda"];
    explicit_input["a"] = first["automorphism"]["a"];
    const json second = json::parse(run_cli({"classify", "--input", explicit_input.dump()}).out);
    CHECK(second["classification"]["kind"] == first["classification"]["kind"]);
    if (first["classification"]["kind"] == "elliptic") {
      CHECK(second["classification"]["order"] == first["classification"]["order"]);
    }
  }
}

TEST_CASE("cli input from a file") {
  const auto path = scratch_dir() / "phi.json";
  std::ofstream(path) << R"({"lambda": {"re": 0, "im": 1}, "a": {"re": 0.5, "im": 0}})";
  const CliResult r = run_cli({"classify", "--input", path.string()});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["input"]["a"]["re"].get<double>() == 0.5);
}

TEST_CASE("cli determinism") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"normal-form", "--input", "psi_r:0.3"},
        std::vector<std::string>{"verify", "--input", "psi1", "--family", "expcusp", "--params", "0.5,1"},
        std::vector<std::string>{"truncate", "--input", "psi_r:0.5", "--N", "20", "--n-powers", "8"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}

TEST_CASE("cli predict") {
  const json ann = json::parse(run_cli({"predict", "--input", "psi_r:0.5", "--space", "hardy:2"}).out);
  CHECK(ann["prediction"]["kind"] == "annulus");
  CHECK(ann["prediction"]["r_in"].get<double>() == doctest::Approx(0.57735026919).epsilon(1e-10));
  CHECK(ann["prediction"]["r_out"].get<double>() == doctest::Approx(1.73205080757).epsilon(1e-10));
  const json circle = json::parse(run_cli({"predict", "--input", "psi1", "--space", "X"}).out);
  CHECK(circle["prediction"]["kind"] == "unit_circle");

  const CliResult csv = run_cli({"predict", "--input", "psi1", "--space", "X", "--format", "csv"});
  CHECK(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "re,im");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 360);

  const CliResult bad = run_cli({"predict", "--input", "psi1", "--space", "sobolev"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(error_object(bad)["exit_code"] == 2);
}

TEST_CASE("cli verify") {
  const CliResult ok = run_cli({"verify", "--input", "psi1", "--family", "expcusp", "--params", "0.5,1.0,2.0"});
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  REQUIRE(j["results"].size() == 3);
  for (const auto& item : j["results"]) {
    CHECK(item["residual"].get<double>() < 1e-10);
    CHECK(item["transported_residual"].get<double>() < 1e-8);
    CHECK(item["pass"] == true);
  }

  const json h = json::parse(run_cli({"verify", "--input", "psi_r:0.5", "--family", "logpower", "--params", "1.0"}).out);
  const auto& mu = h["results"][0]["eigenvalue"];
  CHECK(mu["re"].get<double>() == doctest::Approx(std::cos(std::log(3.0))).epsilon(1e-12));
  CHECK(mu["im"].get<double>() == doctest::Approx(std::sin(std::log(3.0))).epsilon(1e-12));
  CHECK(h["results"][0]["residual"].get<double>() < 1e-10);

  // Conjugated input: the residual is checked on phi as well as on psi.
  const CliResult conj = run_cli({"verify", "--input", R"({"lambda": {"re": 0.6, "im": 0.8}, "a": {"re": 0.2, "im": 0.1}})",
                                  "--family", "monomial", "--params", "1,2,5"});
  CHECK(conj.code == 0);

  const CliResult pairing = run_cli({"verify", "--input", "psi1", "--family", "monomial", "--params", "2"});
  CHECK(pairing.code == 2);
  CHECK(error_object(pairing)["error"] == "PairingError");

  const CliResult fails = run_cli({"verify", "--input", "psi1", "--family", "expcusp", "--params", "1",
                                   "--tol-override", "eigen_verify=1e-300"});
  CHECK(fails.code == 4);
  CHECK(error_object(fails)["exit_code"] == 4);
  CHECK(json::parse(fails.out)["all_pass"] == false);
}

TEST_CASE("cli truncate") {
  const auto dir = scratch_dir();
  const auto csv = dir / "cloud.csv";
  const CliResult r =
      run_cli({"truncate", "--input", "rotation:1/5", "--N", "9", "--weights", "h2", "--n-powers", "4", "--out", csv.string()});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["numerics"]["N"] == 9);
  CHECK(j["numerics"]["max_abs_eigenvalue"].get<double>() == doctest::Approx(1.0));
  REQUIRE(j["numerics"]["eigenvalues"].size() == 10);
  std::istringstream lines(read_file(csv));
  std::string line;
  std::getline(lines, line);
  CHECK(line == "re,im");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 10);
  CHECK(std::filesystem::exists(dir / "cloud_radius.csv"));

  CHECK(run_cli({"truncate", "--input", "psi1", "--N", "100", "--n-powers", "4"}).code == 0);
  CHECK(run_cli({"truncate", "--input", "psi_r:0.5", "--N", "10", "--weights", "bergman:1", "--n-powers", "4"}).code == 0);
  CHECK(run_cli({"truncate", "--input", "psi1", "--N", "600"}).code == 2);
  CHECK(run_cli({"truncate", "--input", "psi1", "--weights", "l1"}).code == 2);
}

TEST_CASE("cli little-bloch") {
  const json s = json::parse(run_cli({"little-bloch", "--s", "1", "--x0", "-1", "--n-max", "1000000"}).out);
  CHECK(std::abs(s["little_bloch"]["value"].get<double>() - 2.0 * std::exp(-1.0)) < 1e-6);
  const json t = json::parse(run_cli({"little-bloch", "--t", "1"}).out);
  CHECK(std::abs(t["little_bloch"]["value"].get<double>() - 2.0) < 1e-6);
  CHECK(run_cli({"little-bloch", "--s", "0"}).code == 2);
  CHECK(run_cli({"little-bloch", "--t", "0"}).code == 2);
  CHECK(run_cli({"little-bloch", "--s", "1", "--t", "1"}).code == 2);
}

TEST_CASE("cli errors") {
  const CliResult identity =
      run_cli({"classify", "--input", R"({"lambda": {"re": -1, "im": 0}, "a": {"re": 0, "im": 0}})"});
  CHECK(identity.code == 3);
  CHECK(error_object(identity)["error"] == "IdentityError");
  CHECK(run_cli({"classify", "--input", "{not json"}).code == 2);
  CHECK(run_cli({"classify", "--input", R"({"lambda": {"re": 1, "im": 0}, "a": {"re": 2, "im": 0}})"}).code == 2);
  CHECK(run_cli({"classify", "--input", "psi_r:1.5"}).code == 2);
  CHECK(run_cli({"classify"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"classify", "--input", "psi1", "--tol-override", "nonsense=1"}).code == 2);

  const json overridden =
      json::parse(run_cli({"classify", "--input", "psi1", "--tol-override", "conjugacy=1e-6"}).out);
  CHECK(overridden["tolerances"]["conjugacy"].get<double>() == 1e-6);
}

TEST_CASE("float formatting") {
  CHECK(autospec::cli::format_float(-0.0) == "0.000000000000e+00");
  CHECK(autospec::cli::format_float(1.0 / 3.0) == "3.333333333333e-01");
  nlohmann::ordered_json j;
  j["x"] = 0.5;
  j["n"] = 2;
  j["nan"] = std::nan("");
  CHECK(autospec::cli::format_json(j) == "{\n  \"x\": 5.000000000000e-01,\n  \"n\": 2,\n  \"nan\": null\n}\n");
}
