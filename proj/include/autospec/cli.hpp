#ifndef AUTOSPEC_CLI_HPP
#define AUTOSPEC_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "autospec/errors.hpp"
#include "autospec/mobius.hpp"
#include "autospec/spectra.hpp"

namespace autospec::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kIdentity = 3,
  kVerificationFailed = 4,
  kEigensolver = 5,
};

/// Malformed command-line or input text.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("InputError", message) {}
};

struct ParsedInput {
  DiskAutomorphism phi = DiskAutomorphism::identity();
  nlohmann::ordered_json echo;
  /// Exact angle of the elliptic multiplier when the input pins it down
  /// (rotation presets and lambda_angle inputs with a = 0).
  std::optional<AngleFraction> exact_multiplier_angle;
};

/// Accepts a JSON object ({"lambda": {re, im}, "a": {re, im}} or
/// {"lambda_angle": {num, den}, "a": {re, im}} or {"preset": name}), a path
/// to a file holding such an object, or a bare preset name: "psi1", "psi2",
/// "psi_r:<r>", "rotation:<num>/<den>".
ParsedInput parse_input(const std::string& text);

/// Serialises with a fixed layout: insertion-ordered keys, two-space
/// indentation and every floating-point value printed as %.12e.
std::string format_json(const nlohmann::ordered_json& value);

/// One CSV float, %.12e.
std::string format_float(double value);

/// Runs one `autospec` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autospec::cli

#endif  // AUTOSPEC_CLI_HPP
