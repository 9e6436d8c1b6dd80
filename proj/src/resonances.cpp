#include "hypflow/resonances.hpp"

#include <algorithm>
#include <cmath>

#include "hypflow/special_functions.hpp"

namespace hypflow {

namespace {

constexpr int kFitDepth = 48;      // model depth for the head fits
constexpr int kMergedDepth = 12;   // direct-fit depth for collided l

// Radial-ODE recurrence for the coefficients of e^{(lambda0 - k) tau}:
//   A(k) c_k = [2 (lambda0-k+2)^2 + 4(m^2+n^2) - 2 l(l+1)] c_{k-2}
//              - B(k-4) c_{k-4} - 4 m n (c_{k-1} + c_{k-3})
// with A(j) = (L-j)(L-j+1) - l(l+1), B(j) = (L-j)(L-j-1) - l(l+1), c_0 = 1.
// A vanishing A(k) with vanishing right side marks a terminating series.
std::vector<cdouble> frobenius_coeffs(cdouble l, cdouble lambda0, int m, int n,
                                      int depth) {
  cdouble cas = l * (l + 1.0);
  auto A = [&](int j) {
    cdouble x = lambda0 - static_cast<double>(j);
    return x * (x + 1.0) - cas;
  };
  auto B = [&](int j) {
    cdouble x = lambda0 - static_cast<double>(j);
    return x * (x - 1.0) - cas;
  };
  double mn = static_cast<double>(m) * n;
  double m2n2 = static_cast<double>(m) * m + static_cast<double>(n) * n;
  std::vector<cdouble> c(depth + 1, 0.0);
  c[0] = 1.0;
  auto get = [&](int j) { return (j >= 0 && j <= depth) ? c[j] : cdouble(0.0); };
  for (int k = 1; k <= depth; ++k) {
    cdouble x = lambda0 - static_cast<double>(k - 2);
    cdouble rhs = (2.0 * x * x + 4.0 * m2n2 - 2.0 * cas) * get(k - 2) -
                  B(k - 4) * get(k - 4) - 4.0 * mn * (get(k - 1) + get(k - 3));
    cdouble ak = A(k);
    double scale = std::max(1.0, static_cast<double>(k) * k);
    if (std::abs(ak) < 1e-9 * scale) {
      double rhs_scale = 1.0;
      for (int j = 1; j <= 4; ++j) rhs_scale = std::max(rhs_scale, std::abs(get(k - j)));
      if (std::abs(rhs) <= 1e-8 * rhs_scale * scale) {
        c[k] = 0.0;  // terminating series
        continue;
      }
      throw AccuracyError(
          "frobenius_coeffs: resonance collision without termination",
          rhs, ak, std::abs(rhs));
    }
    c[k] = rhs / ak;
  }
  return c;
}

cdouble eval_branch(const std::vector<cdouble>& c, cdouble lambda0, double t, int J) {
  KahanSum acc;
  int jmax = std::min<int>(J, static_cast<int>(c.size()) - 1);
  for (int k = 0; k <= jmax; ++k) {
    acc.add(c[k] * std::exp((lambda0 - static_cast<double>(k)) * t));
  }
  return acc.sum;
}

std::vector<double> fit_times(bool collided) {
  if (collided) return {2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0, 6.5};
  return {5.0, 5.6, 6.2, 6.8, 7.4, 8.0};
}

}  // namespace

cdouble branch_head(cdouble l, Branch b) {
  return b == Branch::Plus ? l : -1.0 - l;
}

cdouble resonance_lambda(cdouble l, const ResonanceId& id) {
  return branch_head(l, id.branch) - static_cast<double>(id.depth);
}

bool arithmetic_branch_collision(cdouble l) {
  if (std::abs(l.imag()) > 1e-12) return false;
  double s = 2.0 * l.real() + 1.0;
  return s > 0.5 && near_integer(s, 1e-9);
}

std::vector<ResonanceId> resonance_set(cdouble l, int J, BranchPolicy policy) {
  if (J < 0) throw DomainError("resonance_set: J must be nonnegative");
  std::vector<ResonanceId> ids;
  for (int k = 0; k <= J; ++k) ids.push_back({Branch::Plus, k});
  if (policy == BranchPolicy::Both && !arithmetic_branch_collision(l)) {
    for (int k = 0; k <= J; ++k) ids.push_back({Branch::Minus, k});
  }
  std::stable_sort(ids.begin(), ids.end(), [&](const ResonanceId& a, const ResonanceId& b) {
    cdouble la = resonance_lambda(l, a), lb = resonance_lambda(l, b);
    if (la.real() != lb.real()) return la.real() > lb.real();
    return la.imag() > lb.imag();
  });
  return ids;
}

ResonanceExpansion ResonanceExpansion::build(cdouble l, int m, int n,
                                             int max_depth,
                                             const TruncationParams& p) {
  p.validate();
  ResonanceExpansion e;
  e.l_ = l;
  e.m_ = m;
  e.n_ = n;
  e.max_depth_ = max_depth;
  e.collided_ = arithmetic_branch_collision(l);

  if (!e.collided_) {
    int depth = std::max(max_depth, kFitDepth);
    e.c_plus_ = frobenius_coeffs(l, l, m, n, depth);
    e.c_minus_ = frobenius_coeffs(l, -1.0 - l, m, n, depth);

    std::vector<double> ts = fit_times(false);
    std::vector<cdouble> ys(ts.size());
    oracle::Matrix v(static_cast<int>(ts.size()), 2);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      ys[i] = jacobi_b_quad(l, m, n, ts[i], p);
      v.at(static_cast<int>(i), 0) = eval_branch(e.c_plus_, l, ts[i], depth);
      v.at(static_cast<int>(i), 1) = eval_branch(e.c_minus_, -1.0 - l, ts[i], depth);
    }
    std::vector<cdouble> heads = oracle::least_squares(v, ys);
    e.head_plus_ = heads[0];
    e.head_minus_ = heads[1];
    // misfit certificate
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      cdouble model = heads[0] * v.at(static_cast<int>(i), 0) +
                      heads[1] * v.at(static_cast<int>(i), 1);
      num += std::norm(model - ys[i]);
      den += std::norm(ys[i]);
    }
    if (den > 0.0 && std::sqrt(num / den) > 1e-8) {
      throw AccuracyError("ResonanceExpansion: head fit residual above tolerance",
                          e.head_plus_, e.head_minus_, std::sqrt(num / den));
    }
  } else {
    // Merged exponent family lambda = l - k. Fit amplitudes directly; this
    // detects terminating (finite exponential polynomial) coefficients.
    int depth = std::max(max_depth, kMergedDepth);
    std::vector<double> ts = fit_times(true);
    std::vector<cdouble> ys(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) ys[i] = jacobi_b(l, m, n, ts[i], p);
    std::vector<cdouble> exps(depth + 1);
    for (int k = 0; k <= depth; ++k) exps[k] = l - static_cast<double>(k);
    e.merged_ = oracle::expsum_fit(ts, ys, exps);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      cdouble model = 0.0;
      for (int k = 0; k <= depth; ++k) model += e.merged_[k] * std::exp(exps[k] * ts[i]);
      num += std::norm(model - ys[i]);
      den += std::norm(ys[i]);
    }
    if (den > 0.0 && std::sqrt(num / den) > 1e-7) {
      throw AccuracyError("ResonanceExpansion: merged-family fit failed "
                          "(degenerate resonance structure)",
                          ys[0], ys[1], std::sqrt(num / den));
    }
  }
  return e;
}

cdouble ResonanceExpansion::head(Branch b) const {
  if (collided_) {
    throw DomainError("ResonanceExpansion: heads undefined for collided branches");
  }
  return b == Branch::Plus ? head_plus_ : head_minus_;
}

const std::vector<cdouble>& ResonanceExpansion::relative_coeffs(Branch b) const {
  if (collided_) {
    throw DomainError("ResonanceExpansion: no per-branch coefficients for collided l");
  }
  return b == Branch::Plus ? c_plus_ : c_minus_;
}

cdouble ResonanceExpansion::amplitude(const ResonanceId& id) const {
  if (id.depth < 0) throw DomainError("ResonanceExpansion: negative depth");
  if (!collided_) {
    const auto& c = (id.branch == Branch::Plus) ? c_plus_ : c_minus_;
    cdouble h = (id.branch == Branch::Plus) ? head_plus_ : head_minus_;
    if (id.depth >= static_cast<int>(c.size())) {
      throw DomainError("ResonanceExpansion: depth beyond expansion order");
    }
    return h * c[id.depth];
  }
  // merged family: Minus head sits at depth 2l+1 inside the Plus family
  long shift = (id.branch == Branch::Plus)
                   ? 0
                   : std::lround(2.0 * l_.real() + 1.0);
  long idx = shift + id.depth;
  if (idx >= static_cast<long>(merged_.size())) {
    throw DomainError("ResonanceExpansion: depth beyond merged expansion order");
  }
  return merged_[idx];
}

cdouble ResonanceExpansion::evaluate(double t, int J) const {
  KahanSum acc;
  if (!collided_) {
    int jmax = std::min<int>(J, static_cast<int>(c_plus_.size()) - 1);
    for (int k = 0; k <= jmax; ++k) {
      acc.add(head_plus_ * c_plus_[k] * std::exp((l_ - static_cast<double>(k)) * t));
      acc.add(head_minus_ * c_minus_[k] *
              std::exp((-1.0 - l_ - static_cast<double>(k)) * t));
    }
  } else {
    int jmax = std::min<int>(J, static_cast<int>(merged_.size()) - 1);
    for (int k = 0; k <= jmax; ++k) {
      acc.add(merged_[k] * std::exp((l_ - static_cast<double>(k)) * t));
    }
  }
  return acc.sum;
}

double ResonanceExpansion::tail_estimate(double t, int J) const {
  double geo = 1.0 / (1.0 - std::exp(-t));
  if (!collided_) {
    int k = std::min<int>(J + 1, static_cast<int>(c_plus_.size()) - 1);
    double tp = std::abs(head_plus_ * c_plus_[k]) *
                std::exp((l_.real() - k) * t);
    double tm = std::abs(head_minus_ * c_minus_[k]) *
                std::exp((-1.0 - l_.real() - k) * t);
    return (tp + tm) * geo;
  }
  int k = std::min<int>(J + 1, static_cast<int>(merged_.size()) - 1);
  return std::abs(merged_[k]) * std::exp((l_.real() - k) * t) * geo;
}

cdouble gamma_coefficient(cdouble l, int m, int n, const ResonanceId& id,
                          const TruncationParams& p) {
  return ResonanceExpansion::build(l, m, n, std::max(id.depth, p.resonance_depth), p)
      .amplitude(id);
}

SpectralValue spectral_b(cdouble l, int m, int n, double t,
                         const TruncationParams& p) {
  int J = p.resonance_depth;
  if (t < spectral_t_min(J)) {
    throw DomainError("spectral_b: t below the depth-J resolution threshold");
  }
  ResonanceExpansion e = ResonanceExpansion::build(l, m, n, J, p);
  return SpectralValue{e.evaluate(t, J), e.tail_estimate(t, J)};
}

double spectral_t_min(int J, double tol) {
  return std::log(1.0 / tol) / static_cast<double>(J + 1);
}

// ---------------------------------------------------------------------------
// Weight machinery.

namespace {

oracle::Matrix op_matrix(cdouble l, int M,
                         TrigPolynomial (*op)(LadderSign, cdouble, const TrigPolynomial&),
                         LadderSign sign) {
  oracle::Matrix a(2 * M + 1, 2 * M + 1);
  for (int k = -M; k <= M; ++k) {
    TrigPolynomial img = op(sign, l, TrigPolynomial::mode(k));
    for (int j = -M; j <= M; ++j) a.at(j + M, k + M) = img.coeff(j);
  }
  return a;
}

std::vector<cdouble> paper_closed_form(cdouble l, WeightLabel label, int M) {
  std::vector<cdouble> w(2 * M + 1, 0.0);
  double sqrt_pi = std::sqrt(kPi);
  for (int m = -M; m <= M; ++m) {
    double md = m;
    cdouble v;
    switch (label) {
      case WeightLabel::PhiPlus: {
        // 1/(Gamma(l-m+1) Gamma(l+m+1)) via reciprocal to survive poles
        v = std::exp(-log_gamma(l - md + 1.0) - log_gamma(l + md + 1.0));
        break;
      }
      case WeightLabel::PhiMinus:
        v = (m % 2 == 0) ? 1.0 : -1.0;
        break;
      case WeightLabel::PhiConjPlus:
        v = gamma(l + 1.0) * gamma(l + 1.0) /
            (std::exp(2.0 * l * std::log(2.0)) * sqrt_pi);
        break;
      case WeightLabel::PhiConjMinus: {
        cdouble lb = -1.0 - l;  // principal-series conjugate parameter
        v = gamma(l + 1.0) * gamma(l + 1.0) * gamma(l - md + 1.0) *
            gamma(l + md + 1.0) /
            (std::exp(2.0 * lb * std::log(2.0)) * sqrt_pi);
        break;
      }
    }
    w[m + M] = v;
  }
  return w;
}

double recurrence_residual(const oracle::Matrix& a, const std::vector<cdouble>& w) {
  // ||A w|| / ||w|| over the interior rows of the stacked system
  double num = 0.0, den = 0.0;
  for (const auto& x : w) den += std::norm(x);
  for (int i = 0; i < a.rows; ++i) {
    cdouble s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += a.at(i, j) * w[j];
    num += std::norm(s);
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

// Stacked interior rows of (flow - lambda I) and the top-annihilation ladder.
// m-side labels use the column action; n-side labels use the transpose.
oracle::Matrix annihilation_stack(cdouble l, cdouble lambda, int M, bool m_side) {
  oracle::Matrix flow = flow_generator_matrix(l, M);
  oracle::Matrix ladder = m_side ? depth_lower_matrix(l, M) : depth_raise_matrix(l, M);
  int n = 2 * M + 1;
  int interior = 2 * M - 1;
  oracle::Matrix a(2 * interior, n);
  for (int i = 1; i < n - 1; ++i) {
    for (int j = 0; j < n; ++j) {
      cdouble f = m_side ? flow.at(i, j) : flow.at(j, i);
      cdouble x = m_side ? ladder.at(i, j) : ladder.at(j, i);
      a.at(i - 1, j) = f - (i == j ? lambda : 0.0);
      a.at(interior + i - 1, j) = x;
    }
  }
  return a;
}

}  // namespace

oracle::Matrix flow_generator_matrix(cdouble l, int M) {
  oracle::Matrix a(2 * M + 1, 2 * M + 1);
  for (int k = -M; k <= M; ++k) {
    TrigPolynomial img = lie_derivative(Generator::J1, l, TrigPolynomial::mode(k));
    for (int j = -M; j <= M; ++j) a.at(j + M, k + M) = img.coeff(j);
  }
  return a;
}

oracle::Matrix depth_raise_matrix(cdouble l, int M) {
  return op_matrix(l, M, &flow_ladder, LadderSign::Minus);
}

oracle::Matrix depth_lower_matrix(cdouble l, int M) {
  return op_matrix(l, M, &flow_ladder, LadderSign::Plus);
}

WeightVector weight_vector(cdouble l, WeightLabel label, int M) {
  if (M < 2) throw DomainError("weight_vector: M >= 2 required");
  WeightVector w;
  w.label = label;
  w.M = M;
  w.closed_form = paper_closed_form(l, label, M);

  bool m_side = (label == WeightLabel::PhiPlus || label == WeightLabel::PhiMinus);
  bool plus_branch = (label == WeightLabel::PhiPlus || label == WeightLabel::PhiConjPlus);
  cdouble lambda = plus_branch ? l : -1.0 - l;

  oracle::Matrix a = annihilation_stack(l, lambda, M, m_side);
  oracle::SvdResult svd = oracle::svd_small(a);
  double smax = svd.singular_values.front();
  double smin = svd.singular_values.back();
  if (smin > 1e-6 * smax) {
    throw NoEigenfunctionalError("weight_vector: numerical null space is empty");
  }
  w.null_solve.resize(2 * M + 1);
  for (int i = 0; i <= 2 * M; ++i) {
    w.null_solve[i] = svd.v.at(i, static_cast<int>(svd.singular_values.size()) - 1);
  }
  w.angle = oracle::subspace_angle(w.closed_form, w.null_solve);
  w.annihilation_residual = recurrence_residual(a, w.null_solve);

  if (label == WeightLabel::PhiPlus) {
    w.statement_form_residual = recurrence_residual(a, w.closed_form);
    std::vector<cdouble> proof(2 * M + 1);
    for (int m = -M; m <= M; ++m) {
      proof[m + M] = std::exp(-log_gamma(l) - log_gamma(l + static_cast<double>(m) + 1.0));
    }
    w.proof_form_residual = recurrence_residual(a, proof);
  }
  return w;
}

std::vector<cdouble> raise_weights(const std::vector<cdouble>& w, int k, cdouble l) {
  if (k < 0) throw DomainError("raise_weights: k must be nonnegative");
  int n = static_cast<int>(w.size());
  int M = (n - 1) / 2;
  if (2 * M + 1 != n) throw DomainError("raise_weights: vector must cover a band [-M, M]");
  oracle::Matrix x = depth_raise_matrix(l, M);
  std::vector<cdouble> cur = w;
  for (int step = 0; step < k; ++step) {
    std::vector<cdouble> next(n, 0.0);
    for (int i = 0; i < n; ++i) {
      cdouble s = 0.0;
      for (int j = 0; j < n; ++j) s += x.at(i, j) * cur[j];
      next[i] = s;
    }
    cur = std::move(next);
  }
  // zero out the boundary-corrupted band
  for (int i = 0; i < n; ++i) {
    int m = i - M;
    if (std::abs(m) > M - k) cur[i] = 0.0;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Correlations.

namespace {

struct PairKey {
  int m, n;
  bool operator<(const PairKey& o) const {
    return m != o.m ? m < o.m : n < o.n;
  }
};

std::map<PairKey, ResonanceExpansion> build_expansions(cdouble l,
                                                       const TrigPolynomial& F,
                                                       const TrigPolynomial& G,
                                                       int J,
                                                       const TruncationParams& p) {
  std::map<PairKey, ResonanceExpansion> out;
  for (const auto& [m, fm] : F.coeffs()) {
    (void)fm;
    for (const auto& [n, gn] : G.coeffs()) {
      (void)gn;
      out.emplace(PairKey{m, n}, ResonanceExpansion::build(l, m, n, J, p));
    }
  }
  return out;
}

}  // namespace

cdouble correlation(cdouble l, const TrigPolynomial& F, const TrigPolynomial& G,
                    double t, CorrelationMethod method, const TruncationParams& p) {
  if (t < 0.0) throw DomainError("correlation: t must be nonnegative");
  if (method == CorrelationMethod::Direct) {
    KahanSum acc;
    for (const auto& [m, fm] : F.coeffs()) {
      for (const auto& [n, gn] : G.coeffs()) {
        acc.add(fm * std::conj(gn) * jacobi_b(l, m, n, t, p));
      }
    }
    return acc.sum;
  }
  if (t < spectral_t_min(p.resonance_depth)) {
    throw DomainError("correlation: t below the spectral resolution threshold");
  }
  auto exps = build_expansions(l, F, G, p.resonance_depth, p);
  KahanSum acc;
  for (const auto& [m, fm] : F.coeffs()) {
    for (const auto& [n, gn] : G.coeffs()) {
      acc.add(fm * std::conj(gn) *
              exps.at(PairKey{m, n}).evaluate(t, p.resonance_depth));
    }
  }
  return acc.sum;
}

cdouble weighted_amplitude(cdouble l, const TrigPolynomial& F,
                           const TrigPolynomial& G, const ResonanceId& id,
                           const TruncationParams& p) {
  KahanSum acc;
  for (const auto& [m, fm] : F.coeffs()) {
    for (const auto& [n, gn] : G.coeffs()) {
      acc.add(fm * std::conj(gn) * gamma_coefficient(l, m, n, id, p));
    }
  }
  return acc.sum;
}

namespace {

std::vector<std::pair<cdouble, cdouble>> pole_data(cdouble l, const TrigPolynomial& F,
                                                   const TrigPolynomial& G,
                                                   const TruncationParams& p) {
  auto exps = build_expansions(l, F, G, p.resonance_depth, p);
  std::vector<std::pair<cdouble, cdouble>> poles;  // (lambda, residue)
  for (const auto& id : resonance_set(l, p.resonance_depth)) {
    cdouble lam = resonance_lambda(l, id);
    KahanSum acc;
    for (const auto& [m, fm] : F.coeffs()) {
      for (const auto& [n, gn] : G.coeffs()) {
        acc.add(fm * std::conj(gn) * exps.at(PairKey{m, n}).amplitude(id));
      }
    }
    poles.emplace_back(lam, acc.sum);
  }
  return poles;
}

double max_pole_real(cdouble l) { return std::max(l.real(), -1.0 - l.real()); }

cdouble laplace_resolvent(cdouble l, const TrigPolynomial& F, const TrigPolynomial& G,
                          cdouble z, const TruncationParams& p) {
  double margin = z.real() - max_pole_real(l);
  if (margin < 0.1) {
    throw DomainError("resolvent_correlation: Laplace method needs Re z > max Re lambda + 0.1");
  }
  // Truncation point: the correlation itself decays like e^{max_re * s}.
  double decay = margin;
  double S = std::min(60.0, std::log(1e14) / decay);
  int panels = std::max(8, static_cast<int>(std::ceil(S / 2.0)));
  std::vector<double> nodes, weights;
  oracle::gauss_legendre(24, 0.0, 1.0, nodes, weights);
  KahanSum acc;
  double h = S / panels;
  for (int q = 0; q < panels; ++q) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      double s = (q + nodes[i]) * h;
      cdouble c = correlation(l, F, G, s, CorrelationMethod::Direct, p);
      acc.add(weights[i] * h * std::exp(-z * s) * c);
    }
  }
  return acc.sum;
}

}  // namespace

cdouble resolvent_correlation(cdouble l, const TrigPolynomial& F,
                              const TrigPolynomial& G, cdouble z,
                              ResolventMethod method, const TruncationParams& p) {
  if (method == ResolventMethod::Rational) {
    auto poles = pole_data(l, F, G, p);
    KahanSum acc;
    for (const auto& [lam, res] : poles) {
      if (std::abs(z - lam) < 1e-6) {
        throw PoleError("resolvent_correlation: z within 1e-6 of a resonance pole");
      }
      acc.add(res / (z - lam));
    }
    return acc.sum;
  }
  return laplace_resolvent(l, F, G, z, p);
}

cdouble residue_extraction(cdouble l, const TrigPolynomial& F,
                           const TrigPolynomial& G, cdouble lambda0,
                           const TruncationParams& p) {
  auto poles = pole_data(l, F, G, p);
  const std::vector<double> eps = {0.6, 0.5, 0.4};
  std::vector<cdouble> v(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    cdouble z = lambda0 + eps[i];
    cdouble chat = laplace_resolvent(l, F, G, z, p);
    // subtract the other poles' rational contribution before taking the limit
    for (const auto& [lam, res] : poles) {
      if (std::abs(lam - lambda0) < 1e-9) continue;
      chat -= res / (z - lam);
    }
    v[i] = (z - lambda0) * chat;
  }
  // Lagrange extrapolation to eps = 0.
  cdouble out = 0.0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    cdouble li = 1.0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
      if (j == i) continue;
      li *= eps[j] / (eps[j] - eps[i]);
    }
    out += v[i] * li;
  }
  return out;
}

}  // namespace hypflow
