#ifndef AUTOSPEC_TOLERANCES_HPP
#define AUTOSPEC_TOLERANCES_HPP

#include <map>
#include <string>

namespace autospec {

/// Numerical thresholds shared by all modules. The CLI can override any of
/// them by name (`--tol-override key=value`) and echoes the full set in
/// every report.
struct Tolerances {
  double unimodular = 1e-12;        // | |lambda| - 1 | accepted by constructors
  double pole = 1e-14;              // |1 - conj(a) z| below this is a pole
  double identity = 1e-12;          // lambda = -1, a = 0 detection
  double parabolic_band = 1e-9;     // half-width of the trace test band
  double root_coincidence = 1e-7;   // double-root test inside the band
  double boundary = 1e-9;           // |z| = 1 checks on fixed points
  double conjugacy = 1e-8;          // normal-form residual threshold
  double translation_probe = 1e-8;  // spread of the chart increment
  double rotation_order = 1e-9;     // |lambda^m - 1| for order detection
  double resolvent_singular = 1e-9; // |mu^m - 1| below this is singular
  double resolvent_residual = 1e-9; // post-check of the resolvent solve
  double eigen_verify = 1e-8;       // verify command pass/fail threshold
  double cauchy_tail = 1e-6;        // little-Bloch convergence test
  double overflow = 1e300;          // rescale threshold for matrix powers
  int m_max = 10000;                // largest order probed numerically

  /// Name -> value view used by reports.
  std::map<std::string, double> as_map() const;

  /// Sets one tolerance by name; returns false for unknown keys.
  bool set(const std::string& key, double value);
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace autospec

#endif  // AUTOSPEC_TOLERANCES_HPP
