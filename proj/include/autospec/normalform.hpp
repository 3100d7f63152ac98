#ifndef AUTOSPEC_NORMALFORM_HPP
#define AUTOSPEC_NORMALFORM_HPP

#include <array>

#include "autospec/mobius.hpp"

namespace autospec {

enum class NormalKind { Rotation, ParabolicPlus, ParabolicMinus, Hyperbolic };

const char* to_string(NormalKind kind);

/// psi_1(z) = ((1+i) z - 1) / (z + i - 1); a translation by +2i in the
/// half-plane chart.
DiskAutomorphism psi1();

/// psi_2(z) = ((1-i) z - 1) / (z - i - 1); a translation by -2i.
DiskAutomorphism psi2();

/// psi_r(z) = (z + r) / (1 + r z), fixing +1 (attracting for r > 0) and -1.
DiskAutomorphism psi_r(double r);

/// Canonical conjugacy representative psi together with a conjugator tau
/// satisfying psi = tau o phi o tau^{-1}.
struct NormalForm {
  NormalKind kind = NormalKind::Rotation;
  Complex rotation{1.0, 0.0};  // Rotation: psi(z) = rotation * z
  double r = 0.0;              // Hyperbolic: psi = psi_r
  double translation = 0.0;    // Parabolic: chart increment c before rescaling
  DiskAutomorphism conjugator = DiskAutomorphism::identity();
  double residual = 0.0;       // verify_conjugacy on the default grid

  /// The normal-form automorphism psi.
  DiskAutomorphism symbol() const;
};

/// tau_a(z) = (a - z) / (1 - conj(a) z). Swaps 0 and a; tau_a o tau_a = id.
DiskAutomorphism involution(Complex a);

/// Image of the disk under K(z) = (1 + z) / (1 - z).
struct HalfPlanePoint {
  Complex w;

  /// True when w sits on the imaginary axis, i.e. z was on the circle.
  bool on_boundary(double tol = 1e-12) const { return w.real() <= tol; }
};

/// K(z) = (1 + z) / (1 - z). Throws PoleError at z = 1.
HalfPlanePoint cayley(Complex z);

/// K^{-1}(w) = (w - 1) / (w + 1). Throws PoleError at w = -1.
Complex cayley_inverse(Complex w);
inline Complex cayley_inverse(HalfPlanePoint p) { return cayley_inverse(p.w); }

/// Number of concentric circles used for normal-form residuals.
inline constexpr int kNormalFormGridDepth = 8;

/// sup over the concentric grid (radii 1 - 2^{-k}, k = 1..grid_size,
/// 32 angles each) of |tau(phi(tau^{-1}(z))) - psi(z)|.
double verify_conjugacy(const DiskAutomorphism& phi, const DiskAutomorphism& psi,
                        const DiskAutomorphism& tau, int grid_size);

/// Disk automorphism sending from[i] -> to[i]. Both triples must lie on the
/// unit circle and share an orientation; otherwise the only Mobius map
/// matching them is a reflection of the disk and OrientationError is thrown.
DiskAutomorphism mobius_from_boundary_triple(const std::array<Complex, 3>& from,
                                             const std::array<Complex, 3>& to);

NormalForm elliptic_normal_form(const DiskAutomorphism& phi, const Classification& cls,
                                const Tolerances& tol = default_tolerances());

/// Rotates the fixed point to 1, reads the imaginary translation w -> w + ic
/// off the half-plane chart and rescales |c| to 2. Throws NotTranslation if
/// the chart increment is not constant.
NormalForm parabolic_normal_form(const DiskAutomorphism& phi, const Classification& cls,
                                 const Tolerances& tol = default_tolerances());

/// r = (1 - phi'(p)) / (1 + phi'(p)) at the attracting point p; the
/// conjugator sends (p, q, arc midpoint) to (1, -1, i).
NormalForm hyperbolic_normal_form(const DiskAutomorphism& phi, const Classification& cls,
                                  const Tolerances& tol = default_tolerances());

/// Classifies phi and dispatches to the matching construction.
NormalForm normal_form(const DiskAutomorphism& phi, const Tolerances& tol = default_tolerances());
NormalForm normal_form(const DiskAutomorphism& phi, const Classification& cls,
                       const Tolerances& tol = default_tolerances());

}  // namespace autospec

#endif  // AUTOSPEC_NORMALFORM_HPP
