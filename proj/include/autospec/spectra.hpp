#ifndef AUTOSPEC_SPECTRA_HPP
#define AUTOSPEC_SPECTRA_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autospec/mobius.hpp"

namespace autospec {

/// Angle 2*pi*num/den, kept exact so finite rotation orders are decidable.
struct AngleFraction {
  long num = 0;
  long den = 1;

  AngleFraction reduced() const;
  Complex value() const;
};

enum class Exactness { ExactRational, NumericDetection };

struct RotationOrder {
  std::optional<int> order;  // empty means infinite order
  Exactness exactness = Exactness::NumericDetection;

  bool infinite() const { return !order.has_value(); }
};

/// Smallest m <= m_max with |lambda^m - 1| < tol, else infinite.
/// Throws DomainError if lambda is not unimodular to 1e-9.
RotationOrder rotation_order(Complex lambda, double tol = 1e-9, int m_max = 10000);

/// Exact mode: the order is the reduced denominator.
RotationOrder rotation_order(AngleFraction angle);

enum class SpaceKind { XFamily, Hardy, Bergman, WeightedBanach, Dirichlet };

/// Function space on which C_phi acts.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::XFamily;
  double p = 2.0;
  double alpha = 0.0;

  static SpaceDescriptor x_family() { return {SpaceKind::XFamily}; }
  static SpaceDescriptor dirichlet() { return {SpaceKind::Dirichlet}; }
  static SpaceDescriptor hardy(double p);
  static SpaceDescriptor bergman(double p, double alpha);
  static SpaceDescriptor weighted_banach(double p);

  /// Parses "X", "hardy:<p>", "bergman:<p>:<alpha>", "wbanach:<p>",
  /// "dirichlet". Throws DomainError on anything else.
  static SpaceDescriptor parse(const std::string& text);

  std::string name() const;
};

enum class PredictionKind { UnitCircle, FiniteCyclicGroup, Annulus, AnnulusLowerBound };

const char* to_string(PredictionKind kind);

struct SpectrumPrediction {
  PredictionKind kind = PredictionKind::UnitCircle;
  Complex generator{1.0, 0.0};   // FiniteCyclicGroup
  int order = 0;                 // FiniteCyclicGroup
  std::vector<Complex> elements; // generator^k, k = 0..order-1
  double r_in = 1.0;             // Annulus variants
  double r_out = 1.0;

  /// Boundary samples for plotting: the listed group elements, or `count`
  /// equispaced points on each boundary circle.
  std::vector<Complex> sample(int count) const;
};

struct PredictOptions {
  /// Exact angle of the elliptic multiplier, when known.
  std::optional<AngleFraction> exact_multiplier_angle;
  double order_tol = 1e-9;
  int m_max = 10000;
};

SpectrumPrediction predict_spectrum(const Classification& cls, const SpaceDescriptor& space,
                                    const PredictOptions& options = {});

/// phi'(a)^{-1/p} at the attracting point a. Throws WrongKind for
/// non-hyperbolic input and DomainError for p < 1.
double hardy_spectral_radius(const Classification& cls, double p);

/// det of the m x m cyclic matrix with -mu on the diagonal, 1 on the
/// superdiagonal and 1 in the bottom-left corner: (-1)^m (mu^m - 1).
Complex resolvent_determinant(Complex mu, int m);

/// Unique solution of f o psi - mu f = g for psi(z) = lambda z with
/// lambda^m = 1:
///
///     f = (1 / (1 - mu^m)) sum_{j=0}^{m-1} mu^{m-1-j} g o psi^{(j)}.
class EllipticResolvent {
 public:
  using Function = std::function<Complex(Complex)>;

  /// Throws DomainError if lambda^m != 1 and SingularResolvent if
  /// |mu^m - 1| <= singular_tol.
  EllipticResolvent(int m, Complex lambda, Complex mu, Function g, double singular_tol = 1e-9);

  Complex operator()(Complex z) const;

  /// sup over `grid` of |f(lambda z) - mu f(z) - g(z)|.
  double residual(std::span<const Complex> grid) const;

 private:
  int m_;
  Complex lambda_;
  Complex mu_;
  Complex scale_;
  Function g_;
};

/// Samples f on `grid` after checking the resolvent identity there.
/// Throws ConvergenceError if the residual exceeds residual_tol.
std::vector<Complex> elliptic_resolvent_solve(int m, Complex lambda, Complex mu,
                                              const EllipticResolvent::Function& g,
                                              std::span<const Complex> grid,
                                              const Tolerances& tol = default_tolerances());

bool spectrum_contains(const SpectrumPrediction& prediction, Complex mu, double tol);

}  // namespace autospec

#endif  // AUTOSPEC_SPECTRA_HPP
