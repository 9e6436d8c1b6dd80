#pragma once

#include <optional>
#include <vector>

#include "hypflow/circle_model.hpp"
#include "hypflow/oracle.hpp"

namespace hypflow {

enum class Branch { Plus, Minus };
enum class BranchPolicy { Both, SinglePlus };

/// One Ruelle resonance: lambda = head(branch) - depth with head(Plus) = l,
/// head(Minus) = -1-l.
struct ResonanceId {
  Branch branch{Branch::Plus};
  int depth{0};
};

cdouble branch_head(cdouble l, Branch b);
cdouble resonance_lambda(cdouble l, const ResonanceId& id);

/// True when the two exponent families l - k and -1 - l - k merge
/// (2l + 1 a positive integer: integral or half-integral l).
bool arithmetic_branch_collision(cdouble l);

/// Resonances down to depth J, sorted by Re(lambda) descending (Im descending
/// on ties). Lists both branches for generic l under policy Both; for
/// colliding (discrete) l only the Plus family is listed since the Minus
/// family duplicates its values.
std::vector<ResonanceId> resonance_set(cdouble l, int J,
                                       BranchPolicy policy = BranchPolicy::Both);

/// Resonance expansion of one matrix coefficient:
///   B^l_{mn}(cosh t) = sum_branches head_br(m,n) sum_k c^br_k e^{(lambda_br - k) t}.
/// Relative coefficients c_k come from the radial-ODE recurrence (the
/// exponential regrouping); branch heads are fitted against certified
/// quadrature values of B at large t. For colliding l the amplitudes are
/// fitted directly on the single merged exponent family, which also detects
/// terminating (polynomial) cases.
class ResonanceExpansion {
 public:
  static ResonanceExpansion build(cdouble l, int m, int n, int max_depth,
                                  const TruncationParams& p = {});

  cdouble l() const { return l_; }
  int max_depth() const { return max_depth_; }
  bool collided() const { return collided_; }

  /// gamma^l_{mn}(lambda) for the given resonance.
  cdouble amplitude(const ResonanceId& id) const;
  cdouble head(Branch b) const;
  /// Frobenius coefficients (c_0 = 1) along a branch; empty if collided.
  const std::vector<cdouble>& relative_coeffs(Branch b) const;

  /// Depth-J spectral sum and its truncation tail estimate.
  cdouble evaluate(double t, int J) const;
  double tail_estimate(double t, int J) const;

 private:
  cdouble l_{0.0};
  int m_ = 0, n_ = 0;
  int max_depth_ = 0;
  bool collided_ = false;
  cdouble head_plus_{0.0}, head_minus_{0.0};
  std::vector<cdouble> c_plus_, c_minus_;  // generic case
  std::vector<cdouble> merged_;            // collided case: amplitude at l - k
};

/// gamma^l_{mn}(lambda) for one resonance (convenience wrapper).
cdouble gamma_coefficient(cdouble l, int m, int n, const ResonanceId& id,
                          const TruncationParams& p = {});

struct SpectralValue {
  cdouble value{0.0};
  double tail{0.0};
};

/// Spectral reconstruction of B^l_{mn}(cosh t) at depth p.resonance_depth,
/// with tail estimate. Requires t >= spectral_t_min(J).
SpectralValue spectral_b(cdouble l, int m, int n, double t,
                         const TruncationParams& p = {});
double spectral_t_min(int J, double tol = 1e-6);

// ---------------------------------------------------------------------------
// Weight (eigenfunctional) machinery on the mode band |m| <= M.
// The matrices are derived from the circle-model Lie derivatives: the flow
// generator L_J1 is tridiagonal, the depth ladders are X-+ = L_J3 +- L_J2.

/// Column-action matrix of an operator on modes, rows/cols |k| <= M.
oracle::Matrix flow_generator_matrix(cdouble l, int M);
oracle::Matrix depth_raise_matrix(cdouble l, int M);  // maps lambda-eigenvec to lambda-1
oracle::Matrix depth_lower_matrix(cdouble l, int M);  // maps lambda-eigenvec to lambda+1

enum class WeightLabel { PhiPlus, PhiMinus, PhiConjPlus, PhiConjMinus };

struct WeightVector {
  WeightLabel label{WeightLabel::PhiPlus};
  int M = 0;
  std::vector<cdouble> closed_form;   // coefficient per mode, index m + M
  std::vector<cdouble> null_solve;    // numeric null-space solution
  double angle = 0.0;                 // between the two, scale-invariant
  double annihilation_residual = 0.0; // ||A w|| / ||w|| for the null solve
  // Residuals of the two printed phi_{l+} forms under the derived recurrence
  // (populated for PhiPlus only): statement 1/(G(l-m+1)G(l+m+1)) vs proof
  // 1/(G(l)G(l+m+1)).
  std::optional<double> statement_form_residual;
  std::optional<double> proof_form_residual;
};

/// Closed-form coefficients plus the numerically solved eigenfunctional
/// (null space of the stacked flow-eigen + top-annihilation system).
WeightVector weight_vector(cdouble l, WeightLabel label, int M);

/// Applies the depth-raising ladder k times to a weight vector (the band
/// shrinks by k on each side; entries outside |m| <= M - k are boundary
/// artifacts and are zeroed).
std::vector<cdouble> raise_weights(const std::vector<cdouble>& w, int k, cdouble l);

// ---------------------------------------------------------------------------
// Correlation functions. States are trigonometric polynomials: the pairing is
//   C_l(F, G)(t) = sum_{m,n} F_m conj(G_n) B^l_{mn}(cosh t).

enum class CorrelationMethod { Direct, Spectral };
cdouble correlation(cdouble l, const TrigPolynomial& F, const TrigPolynomial& G,
                    double t, CorrelationMethod method,
                    const TruncationParams& p = {});

/// Resolvent correlation Chat(z) = int_0^inf e^{-zs} C(s) ds
///                               = sum_lambda gamma_w(lambda) / (z - lambda).
enum class ResolventMethod { Rational, Laplace };
cdouble resolvent_correlation(cdouble l, const TrigPolynomial& F,
                              const TrigPolynomial& G, cdouble z,
                              ResolventMethod method,
                              const TruncationParams& p = {});

/// Residue of Chat at lambda0 extracted by a pole-subtracted limit fit of the
/// Laplace-quadrature resolvent along z = lambda0 + eps (eps real); returns
/// lim (z - lambda0) Chat(z).
cdouble residue_extraction(cdouble l, const TrigPolynomial& F,
                           const TrigPolynomial& G, cdouble lambda0,
                           const TruncationParams& p = {});

/// Weighted amplitude sum_{m,n} F_m conj(G_n) gamma_{mn}(lambda).
cdouble weighted_amplitude(cdouble l, const TrigPolynomial& F,
                           const TrigPolynomial& G, const ResonanceId& id,
                           const TruncationParams& p = {});

}  // namespace hypflow
