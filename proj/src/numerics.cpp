#include "autospec/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "autospec/errors.hpp"

namespace autospec {

namespace {

constexpr Complex kI{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_pole(Complex z) {
  if (std::abs(1.0 - z) < 1e-14) throw PoleError("eigenfunction evaluated at z = 1");
}

}  // namespace

void validate(const Eigenfunction& f) {
  std::visit(overloaded{
                 [](const Monomial& m) {
                   if (m.k < 1) throw DomainError("monomial degree must be >= 1");
                 },
                 [](const ExpCusp& e) {
                   if (!(e.s >= 0.0) || !std::isfinite(e.s)) throw DomainError("cusp parameter s must be >= 0");
                 },
                 [](const LogPower& l) {
                   if (!std::isfinite(l.t)) throw DomainError("log-power parameter t must be finite");
                 },
             },
             f);
}

const char* family_name(const Eigenfunction& f) {
  return std::visit(overloaded{
                        [](const Monomial&) { return "monomial"; },
                        [](const ExpCusp&) { return "expcusp"; },
                        [](const LogPower&) { return "logpower"; },
                    },
                    f);
}

Complex eval_eigenfunction(const Eigenfunction& f, Complex z) {
  return std::visit(overloaded{
                        [&](const Monomial& m) { return std::pow(z, m.k); },
                        [&](const ExpCusp& e) {
                          check_pole(z);
                          return std::exp(e.s * (z + 1.0) / (z - 1.0));
                        },
                        [&](const LogPower& l) {
                          check_pole(z);
                          if (std::abs(1.0 + z) < 1e-14) throw PoleError("log-power evaluated at z = -1");
                          return std::exp(kI * l.t * std::log((1.0 + z) / (1.0 - z)));
                        },
                    },
                    f);
}

Complex eigenfunction_derivative(const Eigenfunction& f, Complex z) {
  return std::visit(overloaded{
                        [&](const Monomial& m) {
                          return static_cast<double>(m.k) * std::pow(z, m.k - 1);
                        },
                        [&](const ExpCusp& e) {
                          const Complex d = z - 1.0;
                          return eval_eigenfunction(f, z) * (-2.0 * e.s) / (d * d);
                        },
                        [&](const LogPower& l) {
                          return eval_eigenfunction(f, z) * (2.0 * kI * l.t) / ((1.0 - z) * (1.0 + z));
                        },
                    },
                    f);
}

Complex predicted_eigenvalue(const NormalForm& form, const Eigenfunction& f) {
  validate(f);
  const auto mismatch = [&]() -> Complex {
    throw PairingError(std::string("family '") + family_name(f) + "' is not an eigenfunction family for a " +
                       to_string(form.kind) + " normal form");
  };
  switch (form.kind) {
    case NormalKind::Rotation:
      if (const auto* m = std::get_if<Monomial>(&f)) {
        return std::polar(1.0, m->k * std::arg(form.rotation));
      }
      return mismatch();
    case NormalKind::ParabolicPlus:
    case NormalKind::ParabolicMinus:
      if (const auto* e = std::get_if<ExpCusp>(&f)) {
        const double sign = form.kind == NormalKind::ParabolicPlus ? -1.0 : 1.0;
        return std::polar(1.0, sign * 2.0 * e->s);
      }
      return mismatch();
    case NormalKind::Hyperbolic:
      if (const auto* l = std::get_if<LogPower>(&f)) {
        // Positive base (1+r)/(1-r); the printed (r+1)/(r-1) differs by a
        // sign that cancels against (z+1)/(z-1) = -(1+z)/(1-z).
        return std::polar(1.0, l->t * std::log((1.0 + form.r) / (1.0 - form.r)));
      }
      return mismatch();
  }
  return mismatch();
}

std::vector<double> GridSchedule::radii() const {
  std::vector<double> out;
  for (int k = 1; k <= depth; ++k) out.push_back(1.0 - std::ldexp(1.0, -k));
  return out;
}

std::vector<Complex> GridSchedule::points() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(depth) * angles_per_radius);
  for (double r : radii()) {
    for (int j = 0; j < angles_per_radius; ++j) {
      out.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles_per_radius));
    }
  }
  return out;
}

double eigen_residual(const DiskAutomorphism& phi, const Eigenfunction& f, Complex mu,
                      const GridSchedule& grid) {
  double worst = 0.0;
  for (const Complex z : grid.points()) {
    worst = std::max(worst, std::abs(eval_eigenfunction(f, phi(z)) - mu * eval_eigenfunction(f, z)));
  }
  return worst;
}

Complex PowerSeries::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries automorphism_series(const DiskAutomorphism& phi, int N) {
  if (N < 0) throw DomainError("series truncation must be >= 0");
  PowerSeries out;
  out.coeffs.resize(static_cast<std::size_t>(N) + 1);
  const Complex lambda = phi.lambda();
  const Complex a = phi.a();
  out.coeffs[0] = lambda * a;
  Complex term = -lambda * (1.0 - std::norm(a));
  for (int k = 1; k <= N; ++k) {
    out.coeffs[k] = term;
    term *= std::conj(a);
  }
  return out;
}

PowerSeries truncated_product(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
  PowerSeries out;
  out.coeffs.assign(n, Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    if (f.coeffs[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
  }
  return out;
}

std::vector<double> h2_weights(int N) { return std::vector<double>(static_cast<std::size_t>(N) + 1, 1.0); }

std::vector<double> bergman_weights(int N, double alpha) {
  if (!(alpha > -1.0)) throw DomainError("Bergman weight needs alpha > -1");
  std::vector<double> w(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    w[k] = std::exp(std::lgamma(k + 1.0) + std::lgamma(alpha + 2.0) - std::lgamma(k + alpha + 2.0));
  }
  return w;
}

TruncatedOperator truncated_matrix(const DiskAutomorphism& phi, int N, std::vector<double> weights) {
  if (N < 1) throw DomainError("truncation order must be >= 1");
  if (weights.size() != static_cast<std::size_t>(N) + 1) {
    throw DomainError("weights must have length N + 1");
  }
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0) || !std::isfinite(w); })) {
    throw DomainError("weights must be positive and finite");
  }
  TruncatedOperator T;
  T.weights = std::move(weights);
  T.entries = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  const PowerSeries series = automorphism_series(phi, N);
  PowerSeries column;
  column.coeffs.assign(static_cast<std::size_t>(N) + 1, Complex{});
  column.coeffs[0] = 1.0;
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) T.entries(i, j) = column.coeffs[i];
    if (j < N) column = truncated_product(column, series);
  }
  return T;
}

std::vector<Complex> truncation_eigenvalues(const TruncatedOperator& T) {
  if (T.entries.rows() > 512) throw DomainError("finite sections are limited to 512 x 512");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(T.entries, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver did not converge");
  }
  std::vector<Complex> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
    if (std::arg(x) != std::arg(y)) return std::arg(x) < std::arg(y);
    return std::abs(x) < std::abs(y);
  });
  return out;
}

SpectralRadiusEstimate spectral_radius_estimate(const TruncatedOperator& T, int n_powers, const Tolerances& tol) {
  if (n_powers < 1) throw DomainError("n_powers must be >= 1");
  const Eigen::Index n = T.entries.rows();
  Eigen::VectorXd sqrt_w(n);
  for (Eigen::Index k = 0; k < n; ++k) sqrt_w(k) = std::sqrt(T.weights[k]);
  // D^{1/2} M D^{-1/2}
  const Eigen::MatrixXcd scaled = sqrt_w.asDiagonal() * T.entries * sqrt_w.cwiseInverse().asDiagonal();

  SpectralRadiusEstimate out;
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
  double log_scale = 0.0;
  for (int k = 1; k <= n_powers; ++k) {
    power = power * scaled;
    const double norm = Eigen::BDCSVD<Eigen::MatrixXcd>(power).singularValues()(0);
    if (!std::isfinite(norm) || norm > tol.overflow) {
      throw OverflowGuard("matrix power norm overflowed at n = " + std::to_string(k));
    }
    if (norm == 0.0) {
      out.sequence.resize(n_powers, 0.0);
      out.estimate = 0.0;
      return out;
    }
    log_scale += std::log(norm);
    power /= norm;
    out.sequence.push_back(std::exp(log_scale / k));
  }
  out.estimate = out.sequence.back();
  return out;
}

double sup_norm_estimate(const Eigenfunction& f, const GridSchedule& grid) {
  double best = 0.0;
  for (const Complex z : grid.points()) best = std::max(best, std::abs(eval_eigenfunction(f, z)));
  return best;
}

double bloch_seminorm_estimate(const Eigenfunction& f, const GridSchedule& grid) {
  double best = 0.0;
  for (const Complex z : grid.points()) {
    best = std::max(best, (1.0 - std::norm(z)) * std::abs(eigenfunction_derivative(f, z)));
  }
  return best;
}

LimitEstimate little_bloch_radial_limit(const LogPower& f, std::span<const double> r_sequence,
                                        const Tolerances& tol) {
  if (f.t == 0.0 || !std::isfinite(f.t)) {
    throw DomainError("f_t with t = 0 is constant and lies in the little Bloch space");
  }
  if (r_sequence.size() < 2) throw DomainError("radial sequence needs at least two points");
  LimitEstimate out;
  double prev_r = -1.0;
  for (double r : r_sequence) {
    if (!(r > prev_r) || !(r < 1.0)) throw DomainError("radial sequence must increase towards 1");
    prev_r = r;
    // (1 - r)(1 + r) keeps the digits that 1 - r*r would cancel.
    const double weight = (1.0 - r) * (1.0 + r);
    out.iterates.push_back(weight * std::abs(eigenfunction_derivative(f, Complex(r, 0.0))));
  }
  out.value = out.iterates.back();
  const double tail = std::abs(out.iterates.back() - out.iterates[out.iterates.size() - 2]);
  if (!(tail < tol.cauchy_tail)) {
    throw NoConvergence("radial iterates are not Cauchy: last step " + std::to_string(tail));
  }
  return out;
}

LimitEstimate little_bloch_radial_limit(const LogPower& f, int max_k, const Tolerances& tol) {
  if (max_k < 2) throw DomainError("max_k must be >= 2");
  std::vector<double> radii;
  for (int k = 1; k <= max_k; ++k) radii.push_back(1.0 - std::ldexp(1.0, -k));
  return little_bloch_radial_limit(f, radii, tol);
}

double little_bloch_sequence_limit(double s, double x0, long n_max) {
  if (!(s > 0.0)) throw DomainError("little-Bloch sequence needs s > 0");
  if (!(x0 < 0.0)) throw DomainError("little-Bloch sequence needs x0 < 0");
  if (n_max < 10) throw DomainError("n_max must be >= 10");
  const Complex w(x0, static_cast<double>(n_max));
  const double w_minus_one = std::norm(w - 1.0);
  // z - 1 = 2 / (w - 1); 1 - |z|^2 = (|w - 1|^2 - |w + 1|^2) / |w - 1|^2.
  const double one_minus_mod2 = -4.0 * x0 / w_minus_one;
  const double dist2 = 4.0 / w_minus_one;
  const double f_mod = std::abs(std::exp(s * w));
  return one_minus_mod2 * f_mod * 2.0 * s / dist2;
}

double little_bloch_sequence_term_direct(double s, double x0, long n) {
  const Complex w(x0, static_cast<double>(n));
  const Complex z = (w + 1.0) / (w - 1.0);
  return (1.0 - std::norm(z)) * std::abs(eigenfunction_derivative(ExpCusp{s}, z));
}

}  // namespace autospec
