#pragma once

#include <utility>

#include "hypflow/group.hpp"
#include "hypflow/numeric.hpp"

namespace hypflow {

enum class Series { Principal1, Complementary, Discrete };

/// Representation index chi = (l, epsilon) with its series tag.
/// Principal1: l = -1/2 + ir, r >= 0. Complementary: l in (-1,0), l != -1/2.
/// Discrete: l = n - 1/2 (half-integral) or integral l >= 1 (the variant used
/// by the L^2 decomposition).
struct RepIndex {
  cdouble l{-0.5, 1.0};
  double epsilon{0.0};
  Series series{Series::Principal1};

  static RepIndex principal(double r, double epsilon = 0.0);
  static RepIndex complementary(double l);
  static RepIndex discrete(double l);

  /// Laplacian eigenvalue bookkeeping: lambda'^2 = -l(l+1) (= 1/4 + r^2 on
  /// the principal series).
  cdouble lambda_prime_sq() const { return -l * (l + 1.0); }
  /// Spectral parameter r = Im l.
  double spectral_r() const { return l.imag(); }
};

struct TruncationParams {
  int quad_points = 64;        // base node count for periodic quadrature
  int series_terms = 800;      // cap for the binomial series
  int fourier_cutoff = 64;     // circle-model band K
  int resonance_depth = 6;     // J
  void validate() const;
};

/// Jacobi function B^l_{mn}(cosh tau) by periodic-trapezoid quadrature with a
/// node-doubling certificate (|fine - coarse| <= 1e-10 * max(1, |fine|)).
/// m, n may be integers or half-integers with m - n integral.
cdouble jacobi_b_quad(cdouble l, double m, double n, double tau,
                      const TruncationParams& p = {});

/// Same function by the binomial series
///   sum_{k >= max(0, n-m)} C(l+n, k) C(l-n, k+m-n)
///       cosh^{2l-2k+n-m}(tau/2) sinh^{2k+m-n}(tau/2),
/// with a certified geometric tail bound (< 1e-12 relative) or AccuracyError.
cdouble jacobi_b_series(cdouble l, double m, double n, double tau,
                        const TruncationParams& p = {});

/// Dispatcher: series where it is well-conditioned (small |m|, |n| and
/// moderate tau), quadrature otherwise.
cdouble jacobi_b(cdouble l, double m, double n, double tau,
                 const TruncationParams& p = {});

/// Matrix coefficient (T^chi_g)_{mn} = e^{-i m' phi} e^{-i n' psi}
/// B^l_{m'n'}(cosh tau) with m' = m + epsilon, n' = n + epsilon.
cdouble matrix_element(const RepIndex& chi, const GroupElement& g, int m, int n,
                       const TruncationParams& p = {});

/// Both sides of the composition law
/// (T_{g1 g2})_{mn} = sum_{|k| <= K} (T_{g1})_{mk} (T_{g2})_{kn}.
struct ComposeCheck {
  cdouble lhs{0.0};
  cdouble rhs{0.0};
  double abs_diff() const { return std::abs(lhs - rhs); }
};
ComposeCheck compose_check(const RepIndex& chi, const GroupElement& g1,
                           const GroupElement& g2, int m, int n, int K,
                           const TruncationParams& p = {});

/// Two-term large-s expansion of B^l_{m0}(cosh s) with the exact leading
/// amplitudes gamma_head(l; m) e^{ls} + gamma_head(-1-l; m-side) e^{(-1-l)s}.
cdouble asymptotic_b(cdouble l, int m, double s);

/// Exact branch-head amplitude of the e^{lambda s} asymptotics, used as an
/// independent oracle: 2^{-2lambda} Gamma(2 lambda + 1) /
/// (Gamma(lambda-m+1) Gamma(lambda+m+1)); the second branch of B^l_{mn}
/// carries (-1)^{m+n} Gamma(l-n+1) Gamma(l+n+1) 2^{2l+2} Gamma(-2l-1)
/// sin^2(pi l)/pi^2.
cdouble head_amplitude_plus(cdouble l, int m);
cdouble head_amplitude_minus(cdouble l, int m, int n);

/// Residual of the radial eigen-equation
///   u'' + coth(tau) u' - (m^2 + n^2 - 2 m n cosh tau)/sinh^2(tau) u = l(l+1) u
/// at tau by central differences with the given step.
double eigen_equation_residual(cdouble l, int m, int n, double tau, double step,
                               const TruncationParams& p = {});

}  // namespace hypflow
