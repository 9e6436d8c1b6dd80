#include "hypflow/matrix_elements.hpp"

#include <cmath>

#include "hypflow/oracle.hpp"
#include "hypflow/special_functions.hpp"

namespace hypflow {

namespace {

void check_index_pair(double m, double n) {
  if (!near_integer(2.0 * m) || !near_integer(2.0 * n)) {
    throw DomainError("jacobi_b: m, n must be integers or half-integers");
  }
  if (!near_integer(m - n)) {
    throw DomainError("jacobi_b: m - n must be an integer");
  }
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

}  // namespace

RepIndex RepIndex::principal(double r, double epsilon) {
  if (r < 0.0) throw DomainError("RepIndex: principal series needs r >= 0");
  if (epsilon != 0.0 && epsilon != 0.5) {
    throw DomainError("RepIndex: epsilon must be 0 or 1/2");
  }
  return RepIndex{cdouble(-0.5, r), epsilon, Series::Principal1};
}

RepIndex RepIndex::complementary(double l) {
  if (!(l > -1.0 && l < 0.0) || l == -0.5) {
    throw DomainError("RepIndex: complementary series needs l in (-1,0), l != -1/2");
  }
  return RepIndex{cdouble(l, 0.0), 0.0, Series::Complementary};
}

RepIndex RepIndex::discrete(double l) {
  bool half_integral = near_integer(l + 0.5) && l > 0.0;
  bool integral = near_integer(l) && l >= 1.0;
  if (!half_integral && !integral) {
    throw DomainError("RepIndex: discrete series needs l = n - 1/2 or integral l >= 1");
  }
  return RepIndex{cdouble(l, 0.0), 0.0, Series::Discrete};
}

void TruncationParams::validate() const {
  if (quad_points < 16) throw DomainError("TruncationParams: quad_points >= 16 required");
  if (series_terms <= 0 || fourier_cutoff <= 0 || resonance_depth < 0) {
    throw DomainError("TruncationParams: counts must be positive");
  }
}

cdouble jacobi_b_quad(cdouble l, double m, double n, double tau,
                      const TruncationParams& p) {
  p.validate();
  check_index_pair(m, n);
  if (tau < 0.0) throw DomainError("jacobi_b_quad: tau must be nonnegative");
  if (tau == 0.0) return (m == n) ? 1.0 : 0.0;

  const double c = std::cosh(tau / 2.0);
  const double s = std::sinh(tau / 2.0);
  const cdouble en = l + n;  // exponent of (c + s e^{i theta})
  const cdouble em = l - n;  // exponent of (c + s e^{-i theta})
  const double phase_k = m - n;
  auto integrand = [&](double theta) {
    cdouble eip(std::cos(theta), std::sin(theta));
    cdouble b1 = c + s * eip;
    cdouble b2 = c + s * std::conj(eip);
    return std::exp(en * std::log(b1) + em * std::log(b2)) *
           cdouble(std::cos(phase_k * theta), std::sin(phase_k * theta));
  };

  // The integrand winds roughly |m - n| + (|m| + |n|) arg-range times; start
  // above Nyquist for that and certify by doubling.
  int base = std::max(p.quad_points,
                      64 + 4 * static_cast<int>(std::ceil(std::abs(m) + std::abs(n))));
  base = next_pow2(base);
  cdouble coarse = 0.0, fine = 0.0;
  for (int nodes = base; nodes <= (1 << 16); nodes *= 2) {
    KahanSum acc;
    for (int j = 0; j < nodes; ++j) acc.add(integrand(2.0 * kPi * j / nodes));
    coarse = fine;
    fine = acc.sum / static_cast<double>(nodes);
    if (nodes > base) {
      double diff = std::abs(fine - coarse);
      if (diff <= 1e-10 * std::max(1.0, std::abs(fine))) return fine;
    }
  }
  throw AccuracyError("jacobi_b_quad: node-doubling certificate failed", coarse,
                      fine, std::abs(fine - coarse));
}

cdouble jacobi_b_series(cdouble l, double m, double n, double tau,
                        const TruncationParams& p) {
  p.validate();
  check_index_pair(m, n);
  if (tau < 0.0) throw DomainError("jacobi_b_series: tau must be nonnegative");
  if (tau == 0.0) return (m == n) ? 1.0 : 0.0;

  const long delta = std::lround(m - n);
  const long k0 = std::max(0l, -delta);
  const double lc = std::log(std::cosh(tau / 2.0));
  const double ls = std::log(std::sinh(tau / 2.0));
  const double t2 = std::exp(2.0 * (ls - lc));  // tanh^2(tau/2)

  // first term: C(l+n, k0) C(l-n, k0+delta) cosh^{2l-2k0+n-m} sinh^{2k0+m-n}
  cdouble term = binom(l + n, k0) * binom(l - n, k0 + delta) *
                 std::exp(2.0 * l * lc + (2.0 * k0 + delta) * (ls - lc));
  KahanSum acc;
  acc.add(term);
  int below = 0;
  for (long k = k0; k < k0 + p.series_terms; ++k) {
    cdouble ratio = (l + n - static_cast<double>(k)) *
                    (l - n - static_cast<double>(k + delta)) * t2 /
                    (static_cast<double>(k + 1) * static_cast<double>(k + 1 + delta));
    term *= ratio;
    acc.add(term);
    if (std::abs(term) <= 1e-17 * std::abs(acc.sum)) {
      if (++below >= 5) return acc.sum;
    } else {
      below = 0;
    }
  }
  // Tail estimate: geometric with the current ratio magnitude if contracting.
  double q = std::min(0.999, t2);
  double tail = std::abs(term) * q / (1.0 - q);
  if (tail <= 1e-12 * std::max(1.0, std::abs(acc.sum))) return acc.sum;
  throw AccuracyError("jacobi_b_series: truncation tail above tolerance",
                      acc.sum - term, acc.sum, tail);
}

cdouble jacobi_b(cdouble l, double m, double n, double tau,
                 const TruncationParams& p) {
  if (tau == 0.0) {
    check_index_pair(m, n);
    return (m == n) ? 1.0 : 0.0;
  }
  bool series_ok = std::max(std::abs(m), std::abs(n)) <= 10.5 && tau <= 4.5;
  if (series_ok) {
    try {
      return jacobi_b_series(l, m, n, tau, p);
    } catch (const AccuracyError&) {
      // fall through to quadrature
    }
  }
  return jacobi_b_quad(l, m, n, tau, p);
}

cdouble matrix_element(const RepIndex& chi, const GroupElement& g, int m, int n,
                       const TruncationParams& p) {
  EulerAngles e = to_euler(g);
  double mp = m + chi.epsilon;
  double np = n + chi.epsilon;
  cdouble i(0.0, 1.0);
  return std::exp(-i * mp * e.phi) * std::exp(-i * np * e.psi) *
         jacobi_b(chi.l, mp, np, e.tau, p);
}

ComposeCheck compose_check(const RepIndex& chi, const GroupElement& g1,
                           const GroupElement& g2, int m, int n, int K,
                           const TruncationParams& p) {
  ComposeCheck out;
  out.lhs = matrix_element(chi, compose(g1, g2), m, n, p);
  KahanSum acc;
  for (int k = -K; k <= K; ++k) {
    acc.add(matrix_element(chi, g1, m, k, p) * matrix_element(chi, g2, k, n, p));
  }
  out.rhs = acc.sum;
  return out;
}

cdouble head_amplitude_plus(cdouble l, int m) {
  return std::exp(-2.0 * l * std::log(2.0)) * gamma(2.0 * l + 1.0) /
         (gamma(l - static_cast<double>(m) + 1.0) * gamma(l + static_cast<double>(m) + 1.0));
}

cdouble head_amplitude_minus(cdouble l, int m, int n) {
  cdouble sinpil = std::sin(kPi * l);
  cdouble k_minus = std::exp((2.0 * l + 2.0) * std::log(2.0)) *
                    gamma(-2.0 * l - 1.0) * sinpil * sinpil / (kPi * kPi);
  double sign = ((m + n) % 2 == 0) ? 1.0 : -1.0;
  return k_minus * sign * gamma(l - static_cast<double>(n) + 1.0) *
         gamma(l + static_cast<double>(n) + 1.0);
}

cdouble asymptotic_b(cdouble l, int m, double s) {
  if (s < 3.0) throw DomainError("asymptotic_b: requires s >= 3");
  cdouble lm = -1.0 - l;
  return head_amplitude_plus(l, m) * std::exp(l * s) +
         head_amplitude_minus(l, m, 0) * std::exp(lm * s);
}

double eigen_equation_residual(cdouble l, int m, int n, double tau, double step,
                               const TruncationParams& p) {
  if (tau <= 2.0 * step) throw DomainError("eigen_equation_residual: tau too small");
  auto u = [&](double t) { return jacobi_b(l, m, n, t, p); };
  cdouble um = u(tau - step), u0 = u(tau), up = u(tau + step);
  cdouble d1 = (up - um) / (2.0 * step);
  cdouble d2 = (up - 2.0 * u0 + um) / (step * step);
  double sh = std::sinh(tau);
  double ch = std::cosh(tau);
  cdouble lhs = d2 + (ch / sh) * d1 -
                ((m * m + n * n - 2.0 * m * n * ch) / (sh * sh)) * u0;
  cdouble rhs = l * (l + 1.0) * u0;
  return std::abs(lhs - rhs);
}

}  // namespace hypflow
