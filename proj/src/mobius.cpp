#include "autospec/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "autospec/errors.hpp"

namespace autospec {

namespace {

Complex unit(Complex z) { return z / std::abs(z); }

Complex chart(Complex z) { return (1.0 + z) / (1.0 - z); }

// 4|a|^2 - |1 + lambda|^2 = |tr|^2 - 4|det|. The fixed-point discriminant
// (1 + lambda)^2 - 4|a|^2 lambda equals -lambda times this.
double parabolic_gap(const DiskAutomorphism& phi) {
  return 4.0 * std::norm(phi.a()) - std::norm(1.0 + phi.lambda());
}

Complex root_discriminant_sqrt(const DiskAutomorphism& phi) {
  return std::sqrt(-phi.lambda() * parabolic_gap(phi));
}

}  // namespace

DiskAutomorphism DiskAutomorphism::make(Complex lambda, Complex a, const Tolerances& tol) {
  const double modulus = std::abs(lambda);
  if (!(modulus > 0.0) || !std::isfinite(modulus)) {
    throw DomainError("lambda must be a finite non-zero complex number");
  }
  lambda /= modulus;
  if (std::abs(std::abs(lambda) - 1.0) > tol.unimodular) {
    throw DomainError("lambda is not unimodular after renormalisation");
  }
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !(std::abs(a) < 1.0)) {
    throw DomainError("a must lie in the open unit disk, got |a| = " + std::to_string(std::abs(a)));
  }
  return DiskAutomorphism(lambda, a);
}

DiskAutomorphism DiskAutomorphism::rotation(Complex nu) {
  return make(-nu, Complex(0.0, 0.0));
}

DiskAutomorphism DiskAutomorphism::from_matrix(const Mobius2x2& m, const Tolerances& tol) {
  const double scale = std::max({std::abs(m.A), std::abs(m.B), std::abs(m.C), std::abs(m.D)});
  if (!(scale > 0.0) || std::abs(m.D) <= 1e-14 * scale) {
    throw DomainError("matrix does not fix the disk: z = 0 is sent to infinity");
  }
  const Complex lambda = -m.A / m.D;
  const Complex a = std::conj(-m.C / m.D);
  if (std::abs(std::abs(lambda) - 1.0) > 1e-8 || !(std::abs(a) < 1.0)) {
    throw DomainError("matrix is not a disk automorphism");
  }
  // B/D must equal lambda * a for the map to be of the canonical shape.
  if (std::abs(m.B / m.D - lambda * a) > 1e-8) {
    throw DomainError("matrix is not a disk automorphism (inconsistent translation)");
  }
  return make(lambda, a, tol);
}

Mobius2x2 DiskAutomorphism::matrix() const {
  return {-lambda_, lambda_ * a_, -std::conj(a_), Complex(1.0, 0.0)};
}

Complex DiskAutomorphism::operator()(Complex z) const { return evaluate(*this, z); }

bool DiskAutomorphism::is_identity(const Tolerances& tol) const {
  return std::abs(lambda_ + 1.0) <= tol.identity && std::abs(a_) <= tol.identity;
}

Complex evaluate(const DiskAutomorphism& phi, Complex z, const Tolerances& tol) {
  const Complex den = 1.0 - std::conj(phi.a()) * z;
  if (std::abs(den) < tol.pole) {
    throw PoleError("evaluation at the pole of the automorphism");
  }
  return phi.lambda() * (phi.a() - z) / den;
}

Complex derivative(const DiskAutomorphism& phi, Complex z, const Tolerances& tol) {
  const Complex den = 1.0 - std::conj(phi.a()) * z;
  if (std::abs(den) < tol.pole) {
    throw PoleError("derivative at the pole of the automorphism");
  }
  return phi.lambda() * (std::norm(phi.a()) - 1.0) / (den * den);
}

DiskAutomorphism compose(const DiskAutomorphism& f, const DiskAutomorphism& g) {
  const Mobius2x2 m = f.matrix() * g.matrix();
  // D = 1 - conj(a_f) lambda_g a_g is bounded away from zero.
  const Complex lambda = -m.A / m.D;
  const Complex a = std::conj(-m.C / m.D);
  return DiskAutomorphism::make(unit(lambda), a);
}

DiskAutomorphism inverse(const DiskAutomorphism& phi) {
  return DiskAutomorphism::make(std::conj(phi.lambda()), phi.lambda() * phi.a());
}

DiskAutomorphism conjugate(const DiskAutomorphism& phi, const DiskAutomorphism& tau) {
  return compose(tau, compose(phi, inverse(tau)));
}

FixedPoints fixed_points(const DiskAutomorphism& phi, const Tolerances& tol) {
  if (phi.is_identity(tol)) {
    throw IdentityError("the identity map fixes every point");
  }
  const Complex lambda = phi.lambda();
  const Complex a = phi.a();
  const Complex b = 1.0 + lambda;

  FixedPoints out;
  if (std::abs(a) == 0.0) {
    // -(1 + lambda) z = 0: the centre, plus the point at infinity.
    out.points = {ProjectivePoint{Complex(0.0, 0.0), false}, ProjectivePoint::infinity()};
    return out;
  }

  if (std::abs(trace_discriminant(phi)) <= tol.parabolic_band) {
    const Complex p = b / (2.0 * std::conj(a));
    // Compare the quadratic's own roots before declaring a double root.
    const Complex sq = root_discriminant_sqrt(phi);
    const double separation = std::abs(sq / std::conj(a));
    if (separation < tol.root_coincidence) {
      const Complex u = unit(p);
      out.points = {ProjectivePoint{u, false}, ProjectivePoint{u, false}};
      out.multiplicity_two = true;
      return out;
    }
  }

  const Complex sq = root_discriminant_sqrt(phi);
  const Complex q = std::abs(b + sq) >= std::abs(b - sq) ? b + sq : b - sq;
  const Complex z1 = q / (2.0 * std::conj(a));
  const Complex z2 = 2.0 * lambda * a / q;
  out.points = {ProjectivePoint{z1, false}, ProjectivePoint{z2, false}};
  return out;
}

const char* to_string(AutomorphismKind kind) {
  switch (kind) {
    case AutomorphismKind::Elliptic: return "elliptic";
    case AutomorphismKind::Parabolic: return "parabolic";
    case AutomorphismKind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

const EllipticData& Classification::elliptic() const {
  if (const auto* p = std::get_if<EllipticData>(&payload_)) return *p;
  throw WrongKind(std::string("expected an elliptic classification, got ") + to_string(kind()));
}

const ParabolicData& Classification::parabolic() const {
  if (const auto* p = std::get_if<ParabolicData>(&payload_)) return *p;
  throw WrongKind(std::string("expected a parabolic classification, got ") + to_string(kind()));
}

const HyperbolicData& Classification::hyperbolic() const {
  if (const auto* p = std::get_if<HyperbolicData>(&payload_)) return *p;
  throw WrongKind(std::string("expected a hyperbolic classification, got ") + to_string(kind()));
}

double trace_discriminant(const DiskAutomorphism& phi) {
  // tr = 1 - lambda, |det| = 1 - |a|^2.
  return parabolic_gap(phi) / (4.0 * (1.0 - std::norm(phi.a())));
}

Classification classify(const DiskAutomorphism& phi, const Tolerances& tol) {
  if (phi.is_identity(tol)) {
    throw IdentityError("the identity map has no fixed-point class");
  }
  const double q = trace_discriminant(phi);
  const FixedPoints fp = fixed_points(phi, tol);

  // Inside the band the roots decide: a double root is parabolic, distinct
  // roots fall through to the elliptic/hyperbolic tests below.
  if (std::abs(q) <= tol.parabolic_band && fp.multiplicity_two) {
    const Complex p = fp.points[0].value;
    const Complex w0 = chart(std::conj(p) * phi.lambda() * phi.a());
    return Classification(ParabolicData{p, w0.imag() > 0.0 ? 1 : -1});
  }

  if (q < 0.0) {
    Complex interior = fp.points[0].value;
    if (!fp.points[0].at_infinity && !fp.points[1].at_infinity &&
        std::abs(fp.points[1].value) < std::abs(interior)) {
      interior = fp.points[1].value;
    }
    if (!(std::abs(interior) < 1.0 - tol.boundary)) {
      throw NumericallyAmbiguous("elliptic trace test but no fixed point strictly inside the disk");
    }
    return Classification(EllipticData{interior, derivative(phi, interior, tol)});
  }

  Complex p = fp.points[0].value;
  Complex r = fp.points[1].value;
  if (std::abs(std::abs(p) - 1.0) > 1e-6 || std::abs(std::abs(r) - 1.0) > 1e-6) {
    throw NumericallyAmbiguous("hyperbolic trace test but fixed points are off the unit circle");
  }
  p = unit(p);
  r = unit(r);
  const double one_minus = 1.0 - std::norm(phi.a());
  double dp = one_minus / std::norm(1.0 - std::conj(phi.a()) * p);
  double dr = one_minus / std::norm(1.0 - std::conj(phi.a()) * r);
  if (dp > dr) {
    std::swap(p, r);
    std::swap(dp, dr);
  }
  if (!(dp < 1.0)) {
    throw NumericallyAmbiguous("hyperbolic trace test but the boundary fixed points coincide");
  }
  return Classification(HyperbolicData{p, r, dp, dr});
}

}  // namespace autospec
