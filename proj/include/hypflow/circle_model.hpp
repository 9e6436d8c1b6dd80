#pragma once

#include <map>

#include "hypflow/matrix_elements.hpp"

namespace hypflow {

/// Finite Fourier series f(e^{i theta}) = sum_k coeff(k) e^{-i k theta},
/// |k| <= cutoff.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  explicit TrigPolynomial(int cutoff) : cutoff_(cutoff) {}

  static TrigPolynomial mode(int k, cdouble amplitude = 1.0);

  int cutoff() const { return cutoff_; }
  cdouble coeff(int k) const;
  void set_coeff(int k, cdouble value);

  const std::map<int, cdouble>& coeffs() const { return coeffs_; }

  cdouble evaluate(cdouble unit_w) const;  // at w = e^{i theta}

  /// <f, g> = (1/2pi) \int f conj(g) = sum_k f_k conj(g_k).
  cdouble inner_product(const TrigPolynomial& g) const;
  double norm() const;

  TrigPolynomial& operator+=(const TrigPolynomial& o);
  TrigPolynomial& operator-=(const TrigPolynomial& o);
  TrigPolynomial& operator*=(double s);
  TrigPolynomial operator+(const TrigPolynomial& o) const;
  TrigPolynomial operator-(const TrigPolynomial& o) const;
  TrigPolynomial operator*(double s) const;
  TrigPolynomial scaled(cdouble s) const;

  double max_coeff_distance(const TrigPolynomial& o) const;

 private:
  int cutoff_ = 0;
  std::map<int, cdouble> coeffs_;
};

enum class Generator { J1, J2, J3 };
enum class LadderSign { Plus, Minus };

/// Group action on the circle model:
/// (T^chi_g f)(e^{i theta}) = (beta e^{i theta} + conj(alpha))^{l+eps}
///   (conj(beta) e^{-i theta} + alpha)^{l-eps} f((alpha e^{i theta} +
///   conj(beta)) / (beta e^{i theta} + conj(alpha))).
/// Sampled on 2 * p.fourier_cutoff + 1 nodes, Fourier-analyzed, and
/// alias-certified by cutoff doubling (<= 1e-9). Requires epsilon = 0.
TrigPolynomial act(const RepIndex& chi, const GroupElement& g,
                   const TrigPolynomial& f, const TruncationParams& p = {});

/// Exact mode-algebra Lie derivatives of the circle realization:
///   L_J1 = (1/2)(l e^{i th} + l e^{-i th} - 2 sin th d_th)
///   L_J2 = (i/2)(l e^{i th} - l e^{-i th} + 2 i cos th d_th)
///   L_J3 = d_th
TrigPolynomial lie_derivative(Generator which, cdouble l, const TrigPolynomial& f);

/// Circle-mode ladder operators L+ = i e^{-i th} d_th - l e^{-i th},
/// L- = -i e^{i th} d_th - l e^{i th}:  L+- e^{-ik th} = (+-(k... ) shifts
/// the mode index by -+1 with factors (k - l), (-k - l).
TrigPolynomial ladder(LadderSign sign, cdouble l, const TrigPolynomial& f);

/// Flow-adapted ladders X+- = L_J3 -+ L_J2 satisfying [L_J1, X+-] = +-X+-
/// and [X-, X+] = 2 L_J1.
TrigPolynomial flow_ladder(LadderSign sign, cdouble l, const TrigPolynomial& f);

/// Casimir -L_J1^2 - L_J2^2 + L_J3^2; acts as -l(l+1) on every mode.
TrigPolynomial casimir(cdouble l, const TrigPolynomial& f);
cdouble casimir_scalar(cdouble l);

}  // namespace hypflow
