#ifndef AUTOSPEC_NUMERICS_HPP
#define AUTOSPEC_NUMERICS_HPP

#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "autospec/mobius.hpp"
#include "autospec/normalform.hpp"

namespace autospec {

struct Monomial {
  int k = 1;
};

/// f_s(z) = exp(s (z + 1) / (z - 1)), s >= 0.
struct ExpCusp {
  double s = 0.0;
};

/// f_t(z) = ((1 + z) / (1 - z))^{it} on the principal branch.
struct LogPower {
  double t = 0.0;
};

using Eigenfunction = std::variant<Monomial, ExpCusp, LogPower>;

/// Throws DomainError when the parameters leave their ranges
/// (k >= 1, s >= 0, t finite).
void validate(const Eigenfunction& f);

const char* family_name(const Eigenfunction& f);

/// Throws PoleError within 1e-14 of z = 1 (ExpCusp, LogPower).
Complex eval_eigenfunction(const Eigenfunction& f, Complex z);

/// Analytic derivative of the family member.
Complex eigenfunction_derivative(const Eigenfunction& f, Complex z);

/// Eigenvalue of C_psi on f for a normal form psi: lambda^k for rotations,
/// exp(-+2is) for psi_1/psi_2 and ((1+r)/(1-r))^{it} for psi_r.
/// Throws PairingError for mismatched families.
Complex predicted_eigenvalue(const NormalForm& form, const Eigenfunction& f);

/// Concentric sampling grid: radii 1 - 2^{-k}, k = 1..depth.
struct GridSchedule {
  int depth = 12;
  int angles_per_radius = 32;

  std::vector<double> radii() const;
  std::vector<Complex> points() const;
};

/// sup over the grid of |f(phi(z)) - mu f(z)|.
double eigen_residual(const DiskAutomorphism& phi, const Eigenfunction& f, Complex mu,
                      const GridSchedule& grid);

struct PowerSeries {
  std::vector<Complex> coeffs;  // c_0..c_N

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex operator()(Complex z) const;
};

/// Taylor coefficients of lambda (a - z) / (1 - conj(a) z) up to z^N:
/// c_0 = lambda a, c_k = -lambda (1 - |a|^2) conj(a)^{k-1}.
PowerSeries automorphism_series(const DiskAutomorphism& phi, int N);

/// Product of two series truncated at the shorter length.
PowerSeries truncated_product(const PowerSeries& f, const PowerSeries& g);

/// Finite section of C_phi in the monomial basis: column j holds the
/// coefficients of phi^j. The weights define ||f||^2 = sum w_k |c_k|^2.
struct TruncatedOperator {
  Eigen::MatrixXcd entries;
  std::vector<double> weights;

  int truncation() const { return static_cast<int>(entries.rows()) - 1; }
};

/// Unit weights (the H^2 norm).
std::vector<double> h2_weights(int N);

/// ||z^k||^2 in A^2_alpha with the normalised weighted area measure:
/// Gamma(k+1) Gamma(alpha+2) / Gamma(k+alpha+2).
std::vector<double> bergman_weights(int N, double alpha);

TruncatedOperator truncated_matrix(const DiskAutomorphism& phi, int N, std::vector<double> weights);

/// All N+1 eigenvalues of the finite section, sorted by argument then
/// modulus. Throws DomainError for N+1 > 512 and ConvergenceError if the
/// dense eigensolver does not converge.
std::vector<Complex> truncation_eigenvalues(const TruncatedOperator& T);

struct SpectralRadiusEstimate {
  double estimate = 0.0;          // ||M^n||^{1/n} at n = n_powers
  std::vector<double> sequence;   // ||M^n||^{1/n} for n = 1..n_powers
};

/// Gelfand-style estimate in the weighted operator norm, i.e. the largest
/// singular value of D^{1/2} M^n D^{-1/2}. Powers are renormalised at each
/// step and the scale is accumulated in log form.
SpectralRadiusEstimate spectral_radius_estimate(const TruncatedOperator& T, int n_powers,
                                                const Tolerances& tol = default_tolerances());

/// max |f| over the grid; a lower bound for the sup norm.
double sup_norm_estimate(const Eigenfunction& f, const GridSchedule& grid);

/// max (1 - |z|^2) |f'(z)| over the grid.
double bloch_seminorm_estimate(const Eigenfunction& f, const GridSchedule& grid);

struct LimitEstimate {
  double value = 0.0;              // last iterate
  std::vector<double> iterates;
};

/// (1 - r^2) |f_t'(r)| along r_k = 1 - 2^{-k}, k = 1..max_k. Throws
/// DomainError for t = 0 and NoConvergence if the last two iterates differ
/// by the Cauchy tolerance or more.
LimitEstimate little_bloch_radial_limit(const LogPower& f, int max_k = 40,
                                        const Tolerances& tol = default_tolerances());

/// Radial iterates for an explicit increasing sequence r_k -> 1.
LimitEstimate little_bloch_radial_limit(const LogPower& f, std::span<const double> r_sequence,
                                        const Tolerances& tol = default_tolerances());

/// (1 - |z_n|^2) |f_s'(z_n)| at n = n_max along
/// z_n = (x0 + i n + 1) / (x0 + i n - 1). The point is carried in the chart
/// w_n = x0 + i n, where (z_n + 1)/(z_n - 1) = w_n exactly, so the value
/// does not lose digits as z_n approaches 1.
double little_bloch_sequence_limit(double s, double x0, long n_max);

/// Same quantity evaluated from z_n directly; accurate only for moderate n.
double little_bloch_sequence_term_direct(double s, double x0, long n);

}  // namespace autospec

#endif  // AUTOSPEC_NUMERICS_HPP
