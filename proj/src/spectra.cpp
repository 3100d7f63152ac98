#include "autospec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "autospec/errors.hpp"

namespace autospec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw DomainError("cannot parse " + what + " from '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

AngleFraction AngleFraction::reduced() const {
  if (den == 0) throw DomainError("angle fraction with zero denominator");
  long n = num;
  long d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long g = std::gcd(n, d);
  n /= g;
  d /= g;
  n %= d;
  if (n < 0) n += d;
  return {n, d};
}

Complex AngleFraction::value() const {
  const AngleFraction r = reduced();
  return std::polar(1.0, kTwoPi * static_cast<double>(r.num) / static_cast<double>(r.den));
}

RotationOrder rotation_order(Complex lambda, double tol, int m_max) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-9) {
    throw DomainError("rotation order requires a unimodular number");
  }
  if (m_max < 1) throw DomainError("m_max must be at least 1");
  Complex power{1.0, 0.0};
  for (int m = 1; m <= m_max; ++m) {
    power *= lambda;
    // Renormalise to keep drift from accumulating over long scans.
    power /= std::abs(power);
    if (std::abs(power - 1.0) < tol) {
      return {m, Exactness::NumericDetection};
    }
  }
  return {std::nullopt, Exactness::NumericDetection};
}

RotationOrder rotation_order(AngleFraction angle) {
  const AngleFraction r = angle.reduced();
  return {static_cast<int>(r.den), Exactness::ExactRational};
}

SpaceDescriptor SpaceDescriptor::hardy(double p) {
  if (!(p >= 1.0)) throw DomainError("Hardy space needs p >= 1");
  return {SpaceKind::Hardy, p, 0.0};
}

SpaceDescriptor SpaceDescriptor::bergman(double p, double alpha) {
  if (!(p >= 1.0)) throw DomainError("Bergman space needs p >= 1");
  if (!(alpha > -1.0)) throw DomainError("Bergman space needs alpha > -1");
  return {SpaceKind::Bergman, p, alpha};
}

SpaceDescriptor SpaceDescriptor::weighted_banach(double p) {
  if (!(p > 0.0)) throw DomainError("weighted Banach space needs p > 0");
  return {SpaceKind::WeightedBanach, p, 0.0};
}

SpaceDescriptor SpaceDescriptor::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw DomainError("empty space descriptor");
  const std::string& head = parts[0];
  if ((head == "X" || head == "x") && parts.size() == 1) return x_family();
  if (head == "dirichlet" && parts.size() == 1) return dirichlet();
  if (head == "hardy" && parts.size() == 2) return hardy(parse_number(parts[1], "p"));
  if (head == "bergman" && parts.size() == 3) {
    return bergman(parse_number(parts[1], "p"), parse_number(parts[2], "alpha"));
  }
  if (head == "wbanach" && parts.size() == 2) return weighted_banach(parse_number(parts[1], "p"));
  throw DomainError("unknown space '" + text + "'");
}

std::string SpaceDescriptor::name() const {
  std::ostringstream os;
  switch (kind) {
    case SpaceKind::XFamily: return "X";
    case SpaceKind::Dirichlet: return "dirichlet";
    case SpaceKind::Hardy: os << "hardy:" << p; break;
    case SpaceKind::Bergman: os << "bergman:" << p << ":" << alpha; break;
    case SpaceKind::WeightedBanach: os << "wbanach:" << p; break;
  }
  return os.str();
}

const char* to_string(PredictionKind kind) {
  switch (kind) {
    case PredictionKind::UnitCircle: return "unit_circle";
    case PredictionKind::FiniteCyclicGroup: return "finite_cyclic_group";
    case PredictionKind::Annulus: return "annulus";
    case PredictionKind::AnnulusLowerBound: return "annulus_lower_bound";
  }
  return "unknown";
}

std::vector<Complex> SpectrumPrediction::sample(int count) const {
  std::vector<Complex> out;
  auto circle = [&](double radius) {
    for (int j = 0; j < count; ++j) out.push_back(std::polar(radius, kTwoPi * j / count));
  };
  switch (kind) {
    case PredictionKind::FiniteCyclicGroup: return elements;
    case PredictionKind::UnitCircle: circle(1.0); break;
    case PredictionKind::Annulus:
    case PredictionKind::AnnulusLowerBound:
      circle(r_in);
      circle(r_out);
      break;
  }
  return out;
}

SpectrumPrediction predict_spectrum(const Classification& cls, const SpaceDescriptor& space,
                                    const PredictOptions& options) {
  SpectrumPrediction out;
  switch (cls.kind()) {
    case AutomorphismKind::Elliptic: {
      // Monomials lie in every space considered, so the elliptic answer is
      // the closure of the multiplier's powers everywhere.
      const Complex multiplier = cls.elliptic().multiplier;
      RotationOrder order;
      if (options.exact_multiplier_angle) {
        order = rotation_order(*options.exact_multiplier_angle);
      } else {
        order = rotation_order(multiplier / std::abs(multiplier), options.order_tol, options.m_max);
      }
      if (order.infinite()) return out;
      out.kind = PredictionKind::FiniteCyclicGroup;
      out.order = *order.order;
      if (options.exact_multiplier_angle) {
        const AngleFraction a = options.exact_multiplier_angle->reduced();
        out.generator = a.value();
        for (long k = 0; k < a.den; ++k) {
          out.elements.push_back(AngleFraction{a.num * k, a.den}.value());
        }
      } else {
        const double theta = std::arg(multiplier);
        out.generator = std::polar(1.0, theta);
        for (int k = 0; k < out.order; ++k) out.elements.push_back(std::polar(1.0, theta * k));
      }
      return out;
    }
    case AutomorphismKind::Parabolic:
      return out;
    case AutomorphismKind::Hyperbolic: {
      const HyperbolicData& h = cls.hyperbolic();
      auto annulus = [&](PredictionKind kind, double exponent) {
        const double x = std::pow(h.attracting_multiplier, -exponent);
        const double y = std::pow(h.repelling_multiplier, -exponent);
        out.kind = kind;
        out.r_in = std::min(x, y);
        out.r_out = std::max(x, y);
        return out;
      };
      switch (space.kind) {
        case SpaceKind::XFamily:
        case SpaceKind::Dirichlet:
          return out;
        case SpaceKind::Hardy:
          out.kind = PredictionKind::Annulus;
          out.r_in = std::pow(h.attracting_multiplier, 1.0 / space.p);
          out.r_out = std::pow(h.attracting_multiplier, -1.0 / space.p);
          return out;
        case SpaceKind::Bergman:
          return annulus(PredictionKind::AnnulusLowerBound, (space.alpha + 2.0) / space.p);
        case SpaceKind::WeightedBanach:
          return annulus(PredictionKind::AnnulusLowerBound, space.p);
      }
    }
  }
  throw WrongKind("unsupported classification/space combination");
}

double hardy_spectral_radius(const Classification& cls, double p) {
  if (!(p >= 1.0)) throw DomainError("Hardy space needs p >= 1");
  return std::pow(cls.hyperbolic().attracting_multiplier, -1.0 / p);
}

Complex resolvent_determinant(Complex mu, int m) {
  if (m < 1) throw DomainError("matrix order must be at least 1");
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * (std::pow(mu, m) - 1.0);
}

EllipticResolvent::EllipticResolvent(int m, Complex lambda, Complex mu, Function g, double singular_tol)
    : m_(m), lambda_(lambda), mu_(mu), g_(std::move(g)) {
  if (m < 1) throw DomainError("rotation order must be at least 1");
  if (std::abs(std::pow(lambda, m) - 1.0) > 1e-9) {
    throw DomainError("lambda^m must equal 1");
  }
  const Complex mu_m = std::pow(mu, m);
  if (std::abs(mu_m - 1.0) <= singular_tol) {
    throw SingularResolvent("mu^m = 1: mu lies in the spectrum");
  }
  scale_ = 1.0 / (1.0 - mu_m);
}

Complex EllipticResolvent::operator()(Complex z) const {
  // Horner in mu over the orbit z, lambda z, ..., lambda^{m-1} z.
  Complex acc{};
  Complex point = z;
  Complex weight = std::pow(mu_, m_ - 1);
  const Complex mu_inv = 1.0 / mu_;
  if (std::abs(mu_) > 0.0) {
    for (int j = 0; j < m_; ++j) {
      acc += weight * g_(point);
      weight *= mu_inv;
      point *= lambda_;
    }
  } else {
    // Only the j = m - 1 term survives.
    for (int j = 0; j < m_ - 1; ++j) point *= lambda_;
    acc = g_(point);
  }
  return scale_ * acc;
}

double EllipticResolvent::residual(std::span<const Complex> grid) const {
  double worst = 0.0;
  for (const Complex z : grid) {
    worst = std::max(worst, std::abs((*this)(lambda_ * z) - mu_ * (*this)(z) - g_(z)));
  }
  return worst;
}

std::vector<Complex> elliptic_resolvent_solve(int m, Complex lambda, Complex mu,
                                              const EllipticResolvent::Function& g,
                                              std::span<const Complex> grid, const Tolerances& tol) {
  const EllipticResolvent f(m, lambda, mu, g, tol.resolvent_singular);
  const double res = f.residual(grid);
  if (!(res < tol.resolvent_residual)) {
    throw ConvergenceError("resolvent identity residual " + std::to_string(res));
  }
  std::vector<Complex> out;
  out.reserve(grid.size());
  for (const Complex z : grid) out.push_back(f(z));
  return out;
}

bool spectrum_contains(const SpectrumPrediction& prediction, Complex mu, double tol) {
  switch (prediction.kind) {
    case PredictionKind::UnitCircle:
      return std::abs(std::abs(mu) - 1.0) <= tol;
    case PredictionKind::FiniteCyclicGroup:
      return std::any_of(prediction.elements.begin(), prediction.elements.end(),
                         [&](Complex e) { return std::abs(e - mu) <= tol; });
    case PredictionKind::Annulus:
    case PredictionKind::AnnulusLowerBound: {
      const double r = std::abs(mu);
      return prediction.r_in - tol <= r && r <= prediction.r_out + tol;
    }
  }
  return false;
}

}  // namespace autospec
