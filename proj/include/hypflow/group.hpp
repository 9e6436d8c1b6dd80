#pragma once

#include <array>

#include "hypflow/numeric.hpp"

namespace hypflow {

/// Element of SU(1,1): the quasi-unitary unimodular matrix
///   [ alpha          beta        ]
///   [ conj(beta)     conj(alpha) ]
/// with |alpha|^2 - |beta|^2 = 1. The constraint is checked on construction
/// (tolerance 1e-12) and is preserved by compose() within 1e-10.
class GroupElement {
 public:
  GroupElement() : alpha_(1.0), beta_(0.0) {}
  GroupElement(cdouble alpha, cdouble beta, double tol = 1e-12);

  cdouble alpha() const { return alpha_; }
  cdouble beta() const { return beta_; }

  double quasi_unitarity_defect() const;

  GroupElement inverse() const { return GroupElement(std::conj(alpha_), -beta_, 1e-10); }

  /// Projective (PSU(1,1)) representative: flips sign so that Re(alpha) > 0,
  /// or Im(alpha) > 0 when Re(alpha) == 0.
  GroupElement canonicalized() const;

  static GroupElement identity() { return GroupElement(); }

  bool approx_equal(const GroupElement& o, double tol = 1e-10) const;
  /// Equality up to the +-g identification.
  bool projectively_equal(const GroupElement& o, double tol = 1e-10) const;

 private:
  cdouble alpha_, beta_;
};

/// Euler angles of the product representation
/// g = diag(e^{i phi/2}, e^{-i phi/2}) * g_tau * diag(e^{i psi/2}, e^{-i psi/2}).
/// Angles are reduced into phi in [0, 2pi), psi in [-2pi, 2pi); tau >= 0.
struct EulerAngles {
  EulerAngles(double phi, double tau, double psi);
  double phi, tau, psi;
};

/// Real 2x2 matrix with determinant 1 (tolerance 1e-12).
struct Sl2Element {
  Sl2Element(double a, double b, double c, double d, double tol = 1e-12);
  double a, b, c, d;
};

GroupElement compose(const GroupElement& g1, const GroupElement& g2);
inline GroupElement operator*(const GroupElement& g1, const GroupElement& g2) {
  return compose(g1, g2);
}

GroupElement from_euler(const EulerAngles& e);

/// Inverse of the Euler parametrization. Exact on the stored reduced ranges:
/// from_euler(to_euler(g)) == g (no sign flip). tau == 0 returns psi = 0 and
/// phi = 2 arg(alpha) mod 2pi.
EulerAngles to_euler(const GroupElement& g);

/// Cayley isomorphism SL(2,R) -> SU(1,1): g = h' g' h'^{-1} with
/// h' = (1/sqrt 2) [[1, i], [i, 1]].
GroupElement cayley(const Sl2Element& gp);

/// One-parameter subgroups of SU(1,1).
GroupElement omega1(double t);  // real boost: [[cosh t/2, sinh t/2], ...]
GroupElement omega2(double t);  // imaginary boost: [[cosh t/2, i sinh t/2], ...]
GroupElement omega3(double t);  // rotation: diag(e^{it/2}, e^{-it/2})

/// Geodesic flow direction: right translation by omega1(t). The Cayley image
/// of a_t = diag(e^{t/2}, e^{-t/2}) is omega2(-t) = omega3(-pi/2) omega1(t) omega3(pi/2),
/// i.e. the two conventions are conjugate by a fixed rotation.
GroupElement geodesic_element(double t);

/// Horocycle direction: Cayley image of n_u = [[1, u], [0, 1]].
GroupElement horocycle_element(double u);

/// Rotation subgroup element h_t = omega3(t).
GroupElement rotation_element(double t);

/// Radial Haar density sinh(tau) / (8 pi^2).
double haar_weight(double tau);

/// su(1,1) generators K1, K2, K3 (halves of the Pauli-like matrices).
std::array<std::array<cdouble, 2>, 2> su11_generator(int i);

}  // namespace hypflow
