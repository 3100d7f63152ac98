#include "autospec/normalform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "autospec/errors.hpp"

namespace autospec {

namespace {

constexpr Complex kI{0.0, 1.0};

double orientation(const std::array<Complex, 3>& t) {
  return (std::conj(t[1] - t[0]) * (t[2] - t[0])).imag();
}

// (z - z1)(z3 - z2) / ((z - z2)(z3 - z1)): sends the triple to (0, inf, 1).
Mobius2x2 to_standard(const std::array<Complex, 3>& t) {
  const Complex u = t[2] - t[1];
  const Complex v = t[2] - t[0];
  return {u, -t[0] * u, v, -t[1] * v};
}

Mobius2x2 adjugate(const Mobius2x2& m) { return {m.D, -m.B, -m.C, m.A}; }

// Dilation w -> k w of the right half-plane, pulled back to the disk.
DiskAutomorphism chart_dilation(double k) {
  return psi_r((k - 1.0) / (k + 1.0));
}

}  // namespace

const char* to_string(NormalKind kind) {
  switch (kind) {
    case NormalKind::Rotation: return "rotation";
    case NormalKind::ParabolicPlus: return "parabolic_plus";
    case NormalKind::ParabolicMinus: return "parabolic_minus";
    case NormalKind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

DiskAutomorphism psi1() {
  return DiskAutomorphism::from_matrix({Complex(1.0, 1.0), Complex(-1.0, 0.0), Complex(1.0, 0.0), Complex(-1.0, 1.0)});
}

DiskAutomorphism psi2() {
  return DiskAutomorphism::from_matrix({Complex(1.0, -1.0), Complex(-1.0, 0.0), Complex(1.0, 0.0), Complex(-1.0, -1.0)});
}

DiskAutomorphism psi_r(double r) {
  // (z + r) / (1 + r z) = -1 * (-r - z) / (1 + r z)
  return DiskAutomorphism::make(Complex(-1.0, 0.0), Complex(-r, 0.0));
}

DiskAutomorphism NormalForm::symbol() const {
  switch (kind) {
    case NormalKind::Rotation: return DiskAutomorphism::rotation(rotation);
    case NormalKind::ParabolicPlus: return psi1();
    case NormalKind::ParabolicMinus: return psi2();
    case NormalKind::Hyperbolic: return psi_r(r);
  }
  return DiskAutomorphism::identity();
}

DiskAutomorphism involution(Complex a) {
  if (!(std::abs(a) < 1.0)) {
    throw DomainError("involution centre must lie in the open unit disk");
  }
  return DiskAutomorphism::make(Complex(1.0, 0.0), a);
}

HalfPlanePoint cayley(Complex z) {
  if (std::abs(1.0 - z) < 1e-14) throw PoleError("Cayley chart evaluated at z = 1");
  return {(1.0 + z) / (1.0 - z)};
}

Complex cayley_inverse(Complex w) {
  if (std::abs(w + 1.0) < 1e-14) throw PoleError("inverse Cayley chart evaluated at w = -1");
  return (w - 1.0) / (w + 1.0);
}

double verify_conjugacy(const DiskAutomorphism& phi, const DiskAutomorphism& psi,
                        const DiskAutomorphism& tau, int grid_size) {
  constexpr int kAngles = 32;
  const DiskAutomorphism tau_inv = inverse(tau);
  double worst = std::abs(tau(phi(tau_inv(Complex{}))) - psi(Complex{}));
  for (int k = 1; k <= grid_size; ++k) {
    const double radius = 1.0 - std::ldexp(1.0, -k);
    for (int j = 0; j < kAngles; ++j) {
      const Complex z = std::polar(radius, 2.0 * std::numbers::pi * j / kAngles);
      worst = std::max(worst, std::abs(tau(phi(tau_inv(z))) - psi(z)));
    }
  }
  return worst;
}

DiskAutomorphism mobius_from_boundary_triple(const std::array<Complex, 3>& from,
                                             const std::array<Complex, 3>& to) {
  for (const auto* triple : {&from, &to}) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(std::abs((*triple)[i]) - 1.0) > 1e-9) {
        throw DomainError("boundary triple point is not on the unit circle");
      }
      if (std::abs((*triple)[i] - (*triple)[(i + 1) % 3]) < 1e-12) {
        throw DomainError("boundary triple points must be distinct");
      }
    }
  }
  if ((orientation(from) > 0.0) != (orientation(to) > 0.0)) {
    throw OrientationError("boundary triples have opposite orientation; only a reflection matches them");
  }
  const Mobius2x2 m = adjugate(to_standard(to)) * to_standard(from);
  const DiskAutomorphism tau = DiskAutomorphism::from_matrix(m);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(tau(from[i]) - to[i]) > 1e-10) {
      throw ConjugacyFailure("three-point map misses an anchor by more than 1e-10");
    }
  }
  return tau;
}

NormalForm elliptic_normal_form(const DiskAutomorphism& phi, const Classification& cls,
                                const Tolerances& tol) {
  const EllipticData& e = cls.elliptic();
  NormalForm nf;
  nf.kind = NormalKind::Rotation;
  nf.rotation = e.multiplier / std::abs(e.multiplier);
  nf.conjugator = involution(e.fixed_point);
  nf.residual = verify_conjugacy(phi, nf.symbol(), nf.conjugator, kNormalFormGridDepth);
  if (!(nf.residual < tol.conjugacy)) {
    throw ConjugacyFailure("elliptic conjugacy residual " + std::to_string(nf.residual));
  }
  return nf;
}

NormalForm parabolic_normal_form(const DiskAutomorphism& phi, const Classification& cls,
                                 const Tolerances& tol) {
  const ParabolicData& par = cls.parabolic();
  const DiskAutomorphism rho = DiskAutomorphism::rotation(std::conj(par.fixed_point));
  const DiskAutomorphism moved = conjugate(phi, rho);

  // Probe the chart increment K(moved(K^{-1}(w))) - w on 50 points.
  std::vector<double> increments;
  double off_axis = 0.0;
  for (double x : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    for (int j = 0; j < 10; ++j) {
      const Complex w(x, -4.0 + 8.0 * j / 9.0);
      const Complex delta = cayley(moved(cayley_inverse(w))).w - w;
      increments.push_back(delta.imag());
      off_axis = std::max(off_axis, std::abs(delta.real()));
    }
  }
  const auto [lo, hi] = std::minmax_element(increments.begin(), increments.end());
  if (*hi - *lo > tol.translation_probe || off_axis > tol.translation_probe) {
    throw NotTranslation("chart increment is not a constant imaginary translation");
  }
  double c = 0.0;
  for (double v : increments) c += v;
  c /= static_cast<double>(increments.size());
  if (c == 0.0) {
    throw NotTranslation("chart increment vanishes");
  }

  NormalForm nf;
  nf.kind = c > 0.0 ? NormalKind::ParabolicPlus : NormalKind::ParabolicMinus;
  nf.translation = c;
  nf.conjugator = compose(chart_dilation(2.0 / std::abs(c)), rho);
  nf.residual = verify_conjugacy(phi, nf.symbol(), nf.conjugator, kNormalFormGridDepth);
  if (!(nf.residual < tol.conjugacy)) {
    throw ConjugacyFailure("parabolic conjugacy residual " + std::to_string(nf.residual));
  }
  return nf;
}

NormalForm hyperbolic_normal_form(const DiskAutomorphism& phi, const Classification& cls,
                                  const Tolerances& tol) {
  const HyperbolicData& h = cls.hyperbolic();
  const double m = h.attracting_multiplier;

  NormalForm nf;
  nf.kind = NormalKind::Hyperbolic;
  nf.r = (1.0 - m) / (1.0 + m);
  const DiskAutomorphism psi = nf.symbol();

  const double tp = std::arg(h.attracting);
  double span = std::arg(h.repelling) - tp;
  while (span <= 0.0) span += 2.0 * std::numbers::pi;
  const Complex mid = std::polar(1.0, tp + 0.5 * span);

  double best = 0.0;
  for (const auto& [u, target] : {std::pair{mid, kI}, std::pair{-mid, -kI}}) {
    const DiskAutomorphism tau =
        mobius_from_boundary_triple({h.attracting, h.repelling, u}, {Complex(1.0, 0.0), Complex(-1.0, 0.0), target});
    const double residual = verify_conjugacy(phi, psi, tau, kNormalFormGridDepth);
    if (residual < tol.conjugacy) {
      nf.conjugator = tau;
      nf.residual = residual;
      return nf;
    }
    best = residual;
  }
  throw ConjugacyFailure("hyperbolic conjugacy residual " + std::to_string(best));
}

NormalForm normal_form(const DiskAutomorphism& phi, const Classification& cls, const Tolerances& tol) {
  switch (cls.kind()) {
    case AutomorphismKind::Elliptic: return elliptic_normal_form(phi, cls, tol);
    case AutomorphismKind::Parabolic: return parabolic_normal_form(phi, cls, tol);
    case AutomorphismKind::Hyperbolic: return hyperbolic_normal_form(phi, cls, tol);
  }
  throw WrongKind("unknown classification");
}

NormalForm normal_form(const DiskAutomorphism& phi, const Tolerances& tol) {
  return normal_form(phi, classify(phi, tol), tol);
}

}  // namespace autospec
