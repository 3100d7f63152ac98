#ifndef AUTOSPEC_MOBIUS_HPP
#define AUTOSPEC_MOBIUS_HPP

#include <array>
#include <complex>
#include <variant>

#include "autospec/tolerances.hpp"

namespace autospec {

using Complex = std::complex<double>;

/// Coefficients of z -> (A z + B) / (C z + D).
struct Mobius2x2 {
  Complex A, B, C, D;

  Mobius2x2 operator*(const Mobius2x2& rhs) const {
    return {A * rhs.A + B * rhs.C, A * rhs.B + B * rhs.D,
            C * rhs.A + D * rhs.C, C * rhs.B + D * rhs.D};
  }
  Complex apply(Complex z) const { return (A * z + B) / (C * z + D); }
};

/// Automorphism of the unit disk in the canonical form
///
///     z -> lambda (a - z) / (1 - conj(a) z),   |lambda| = 1, |a| < 1.
///
/// Note that the identity is lambda = -1, a = 0 in this parametrisation.
class DiskAutomorphism {
 public:
  /// make_automorphism: lambda is renormalised to the unit circle.
  /// Throws DomainError if lambda = 0, |lambda| is not 1 after
  /// renormalisation, or |a| >= 1.
  static DiskAutomorphism make(Complex lambda, Complex a,
                               const Tolerances& tol = default_tolerances());

  static DiskAutomorphism identity() { return DiskAutomorphism(Complex(-1.0, 0.0), Complex(0.0, 0.0)); }

  /// Rotation z -> nu z about the origin (|nu| = 1).
  static DiskAutomorphism rotation(Complex nu);

  /// Converts a general Mobius matrix to canonical form. Throws DomainError
  /// when the matrix does not describe a disk automorphism (for instance a
  /// map taking the disk to its exterior).
  static DiskAutomorphism from_matrix(const Mobius2x2& m,
                                      const Tolerances& tol = default_tolerances());

  Complex lambda() const { return lambda_; }
  Complex a() const { return a_; }

  /// [[-lambda, lambda a], [-conj(a), 1]]
  Mobius2x2 matrix() const;

  Complex operator()(Complex z) const;

  bool is_identity(const Tolerances& tol = default_tolerances()) const;

 private:
  DiskAutomorphism(Complex lambda, Complex a) : lambda_(lambda), a_(a) {}

  Complex lambda_;
  Complex a_;
};

/// lambda (a - z) / (1 - conj(a) z). Throws PoleError if the denominator
/// vanishes to within the pole tolerance.
Complex evaluate(const DiskAutomorphism& phi, Complex z,
                 const Tolerances& tol = default_tolerances());

/// lambda (|a|^2 - 1) / (1 - conj(a) z)^2.
Complex derivative(const DiskAutomorphism& phi, Complex z,
                   const Tolerances& tol = default_tolerances());

/// f o g.
DiskAutomorphism compose(const DiskAutomorphism& f, const DiskAutomorphism& g);

DiskAutomorphism inverse(const DiskAutomorphism& phi);

/// tau o phi o tau^{-1}.
DiskAutomorphism conjugate(const DiskAutomorphism& phi, const DiskAutomorphism& tau);

/// A point of the Riemann sphere; rotations about 0 also fix infinity.
struct ProjectivePoint {
  Complex value{};
  bool at_infinity = false;

  static ProjectivePoint infinity() { return {Complex{}, true}; }
};

struct FixedPoints {
  std::array<ProjectivePoint, 2> points;
  bool multiplicity_two = false;
};

/// Roots of conj(a) z^2 - (1 + lambda) z + lambda a = 0. Throws IdentityError
/// for the identity map.
FixedPoints fixed_points(const DiskAutomorphism& phi,
                         const Tolerances& tol = default_tolerances());

enum class AutomorphismKind { Elliptic, Parabolic, Hyperbolic };

const char* to_string(AutomorphismKind kind);

struct EllipticData {
  Complex fixed_point;  // interior fixed point
  Complex multiplier;   // phi'(fixed_point), unimodular
};

struct ParabolicData {
  Complex fixed_point;   // on the unit circle
  int translation_sign;  // +1 or -1, direction of the half-plane translation
};

struct HyperbolicData {
  Complex attracting;             // phi'(attracting) in (0, 1)
  Complex repelling;              // phi'(repelling) = 1 / phi'(attracting)
  double attracting_multiplier;
  double repelling_multiplier;
};

class Classification {
 public:
  using Payload = std::variant<EllipticData, ParabolicData, HyperbolicData>;

  explicit Classification(Payload payload) : payload_(payload) {}

  AutomorphismKind kind() const { return static_cast<AutomorphismKind>(payload_.index()); }

  const EllipticData& elliptic() const;
  const ParabolicData& parabolic() const;
  const HyperbolicData& hyperbolic() const;

  const Payload& payload() const { return payload_; }

 private:
  Payload payload_;
};

/// Normalised trace discriminant |tr|^2 / (4 |det|) - 1 of the matrix of phi.
/// Negative for elliptic, zero for parabolic and positive for hyperbolic maps.
double trace_discriminant(const DiskAutomorphism& phi);

/// Fixed-point classification. Throws IdentityError for the identity and
/// NumericallyAmbiguous when the trace test lands inside the parabolic band
/// but the roots do not coincide.
Classification classify(const DiskAutomorphism& phi,
                        const Tolerances& tol = default_tolerances());

}  // namespace autospec

#endif  // AUTOSPEC_MOBIUS_HPP
