#include "hypflow/group.hpp"

#include <cmath>

namespace hypflow {

namespace {

double norm_sq(cdouble z) { return z.real() * z.real() + z.imag() * z.imag(); }

// reduce x into [lo, lo + period)
double reduce_mod(double x, double lo, double period) {
  double y = std::fmod(x - lo, period);
  if (y < 0) y += period;
  return y + lo;
}

}  // namespace

GroupElement::GroupElement(cdouble alpha, cdouble beta, double tol)
    : alpha_(alpha), beta_(beta) {
  if (!is_finite(alpha) || !is_finite(beta)) {
    throw DomainError("GroupElement: non-finite entries");
  }
  if (std::abs(norm_sq(alpha) - norm_sq(beta) - 1.0) > tol) {
    throw DomainError("GroupElement: |alpha|^2 - |beta|^2 != 1");
  }
}

double GroupElement::quasi_unitarity_defect() const {
  return std::abs(norm_sq(alpha_) - norm_sq(beta_) - 1.0);
}

GroupElement GroupElement::canonicalized() const {
  bool flip = alpha_.real() < 0.0 ||
              (alpha_.real() == 0.0 && alpha_.imag() < 0.0);
  return flip ? GroupElement(-alpha_, -beta_, 1e-9) : *this;
}

bool GroupElement::approx_equal(const GroupElement& o, double tol) const {
  return std::abs(alpha_ - o.alpha_) <= tol && std::abs(beta_ - o.beta_) <= tol;
}

bool GroupElement::projectively_equal(const GroupElement& o, double tol) const {
  return approx_equal(o, tol) ||
         (std::abs(alpha_ + o.alpha_) <= tol && std::abs(beta_ + o.beta_) <= tol);
}

EulerAngles::EulerAngles(double phi_in, double tau_in, double psi_in) {
  if (!(std::isfinite(phi_in) && std::isfinite(tau_in) && std::isfinite(psi_in))) {
    throw DomainError("EulerAngles: non-finite angles");
  }
  if (tau_in < 0.0) throw DomainError("EulerAngles: tau must be nonnegative");
  tau = tau_in;
  phi = reduce_mod(phi_in, 0.0, 2.0 * kPi);
  psi = reduce_mod(psi_in, -2.0 * kPi, 4.0 * kPi);
}

Sl2Element::Sl2Element(double a, double b, double c, double d, double tol)
    : a(a), b(b), c(c), d(d) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))) {
    throw DomainError("Sl2Element: non-finite entries");
  }
  if (std::abs(a * d - b * c - 1.0) > tol) {
    throw DomainError("Sl2Element: ad - bc != 1");
  }
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  cdouble alpha = g1.alpha() * g2.alpha() + g1.beta() * std::conj(g2.beta());
  cdouble beta = g1.alpha() * g2.beta() + g1.beta() * std::conj(g2.alpha());
  return GroupElement(alpha, beta, 1e-10);
}

GroupElement from_euler(const EulerAngles& e) {
  cdouble i(0.0, 1.0);
  cdouble alpha = std::cosh(e.tau / 2.0) * std::exp(i * (e.phi + e.psi) / 2.0);
  cdouble beta = std::sinh(e.tau / 2.0) * std::exp(i * (e.phi - e.psi) / 2.0);
  return GroupElement(alpha, beta, 1e-10);
}

EulerAngles to_euler(const GroupElement& g) {
  double ab = std::abs(g.beta());
  double tau = 2.0 * std::asinh(ab);
  if (ab < 1e-15) {
    double phi = reduce_mod(2.0 * std::arg(g.alpha()), 0.0, 2.0 * kPi);
    return EulerAngles(phi, tau, 0.0);
  }
  double sum = 2.0 * std::arg(g.alpha());   // phi + psi, mod 4pi
  double diff = 2.0 * std::arg(g.beta());   // phi - psi, mod 4pi
  double phi = (sum + diff) / 2.0;
  double psi = (sum - diff) / 2.0;
  // Move phi into [0, 2pi) by +-2pi; compensate psi by the same shift so the
  // matrix (not just its projective class) is reproduced.
  if (phi < 0.0) {
    phi += 2.0 * kPi;
    psi += (psi + 2.0 * kPi <= 2.0 * kPi) ? 2.0 * kPi : -2.0 * kPi;
  } else if (phi >= 2.0 * kPi) {
    phi -= 2.0 * kPi;
    psi += (psi - 2.0 * kPi >= -2.0 * kPi) ? -2.0 * kPi : 2.0 * kPi;
  }
  if (psi >= 2.0 * kPi) psi -= 4.0 * kPi;
  if (psi < -2.0 * kPi) psi += 4.0 * kPi;
  return EulerAngles(phi, tau, psi);
}

GroupElement cayley(const Sl2Element& gp) {
  // h' g' h'^{-1} expanded in closed form.
  cdouble i(0.0, 1.0);
  cdouble alpha = 0.5 * ((gp.a + gp.d) + i * (gp.c - gp.b));
  cdouble beta = 0.5 * ((gp.b + gp.c) + i * (gp.d - gp.a));
  return GroupElement(alpha, beta, 1e-10);
}

GroupElement omega1(double t) {
  return GroupElement(std::cosh(t / 2.0), std::sinh(t / 2.0), 1e-10);
}

GroupElement omega2(double t) {
  return GroupElement(std::cosh(t / 2.0), cdouble(0.0, std::sinh(t / 2.0)), 1e-10);
}

GroupElement omega3(double t) {
  cdouble i(0.0, 1.0);
  return GroupElement(std::exp(i * t / 2.0), 0.0, 1e-10);
}

GroupElement geodesic_element(double t) { return omega1(t); }

GroupElement horocycle_element(double u) {
  return cayley(Sl2Element(1.0, u, 0.0, 1.0));
}

GroupElement rotation_element(double t) { return omega3(t); }

double haar_weight(double tau) {
  if (tau < 0.0) throw DomainError("haar_weight: tau must be nonnegative");
  return std::sinh(tau) / (8.0 * kPi * kPi);
}

std::array<std::array<cdouble, 2>, 2> su11_generator(int i) {
  cdouble I(0.0, 1.0);
  switch (i) {
    case 1:
      return {{{0.0, 0.5}, {0.5, 0.0}}};
    case 2:
      return {{{0.0, -0.5 * I}, {0.5 * I, 0.0}}};
    case 3:
      return {{{0.5 * I, 0.0}, {0.0, -0.5 * I}}};
    default:
      throw DomainError("su11_generator: index must be 1, 2 or 3");
  }
}

}  // namespace hypflow
