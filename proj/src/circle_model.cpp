#include "hypflow/circle_model.hpp"

#include <cmath>
#include <vector>

namespace hypflow {

TrigPolynomial TrigPolynomial::mode(int k, cdouble amplitude) {
  TrigPolynomial f(std::abs(k));
  f.set_coeff(k, amplitude);
  return f;
}

cdouble TrigPolynomial::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cdouble(0.0) : it->second;
}

void TrigPolynomial::set_coeff(int k, cdouble value) {
  if (!is_finite(value)) throw DomainError("TrigPolynomial: non-finite coefficient");
  if (std::abs(k) > cutoff_) cutoff_ = std::abs(k);
  if (value == cdouble(0.0)) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = value;
  }
}

cdouble TrigPolynomial::evaluate(cdouble w) const {
  // w on the unit circle; f = sum_k c_k w^{-k}
  cdouble acc = 0.0;
  for (const auto& [k, c] : coeffs_) acc += c * std::pow(w, cdouble(-k, 0.0));
  return acc;
}

cdouble TrigPolynomial::inner_product(const TrigPolynomial& g) const {
  cdouble acc = 0.0;
  for (const auto& [k, c] : coeffs_) acc += c * std::conj(g.coeff(k));
  return acc;
}

double TrigPolynomial::norm() const {
  double s = 0.0;
  for (const auto& [k, c] : coeffs_) {
    (void)k;
    s += std::norm(c);
  }
  return std::sqrt(s);
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) set_coeff(k, coeff(k) + c);
  return *this;
}

TrigPolynomial& TrigPolynomial::operator-=(const TrigPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) set_coeff(k, coeff(k) - c);
  return *this;
}

TrigPolynomial& TrigPolynomial::operator*=(double s) {
  for (auto& [k, c] : coeffs_) {
    (void)k;
    c *= s;
  }
  return *this;
}

TrigPolynomial TrigPolynomial::operator+(const TrigPolynomial& o) const {
  TrigPolynomial r = *this;
  r += o;
  return r;
}

TrigPolynomial TrigPolynomial::operator-(const TrigPolynomial& o) const {
  TrigPolynomial r = *this;
  r -= o;
  return r;
}

TrigPolynomial TrigPolynomial::operator*(double s) const {
  TrigPolynomial r = *this;
  r *= s;
  return r;
}

TrigPolynomial TrigPolynomial::scaled(cdouble s) const {
  TrigPolynomial r = *this;
  for (auto& [k, c] : r.coeffs_) {
    (void)k;
    c *= s;
  }
  return r;
}

double TrigPolynomial::max_coeff_distance(const TrigPolynomial& o) const {
  double d = 0.0;
  int K = std::max(cutoff_, o.cutoff_);
  for (int k = -K; k <= K; ++k) d = std::max(d, std::abs(coeff(k) - o.coeff(k)));
  return d;
}

namespace {

// One sampling pass: nodes theta_j = 2 pi j / N, Fourier-analyze up to band K.
std::vector<cdouble> sample_and_analyze(const RepIndex& chi, const GroupElement& g,
                                        const TrigPolynomial& f, int K, int N) {
  cdouble alpha = g.alpha(), beta = g.beta();
  std::vector<cdouble> samples(N);
  for (int j = 0; j < N; ++j) {
    double theta = 2.0 * kPi * j / N;
    cdouble w(std::cos(theta), std::sin(theta));
    cdouble den = beta * w + std::conj(alpha);
    cdouble num = alpha * w + std::conj(beta);
    cdouble mult = std::exp((chi.l + chi.epsilon) * std::log(den) +
                            (chi.l - chi.epsilon) * std::log(std::conj(den)));
    cdouble image = num / den;
    image /= std::abs(image);  // boundary Moebius image stays unimodular
    samples[j] = mult * f.evaluate(image);
  }
  std::vector<cdouble> coeffs(2 * K + 1);
  for (int k = -K; k <= K; ++k) {
    KahanSum acc;
    for (int j = 0; j < N; ++j) {
      double theta = 2.0 * kPi * j / N;
      acc.add(samples[j] * cdouble(std::cos(k * theta), std::sin(k * theta)));
    }
    coeffs[k + K] = acc.sum / static_cast<double>(N);
  }
  return coeffs;
}

}  // namespace

TrigPolynomial act(const RepIndex& chi, const GroupElement& g,
                   const TrigPolynomial& f, const TruncationParams& p) {
  p.validate();
  if (chi.epsilon != 0.0) {
    throw DomainError("act: only the parity-0 (epsilon = 0) realization is supported");
  }
  int K = p.fourier_cutoff;
  if (f.cutoff() > K) throw DomainError("act: input cutoff exceeds fourier_cutoff");

  GroupElement gc = g.canonicalized();  // keeps log branches away from the cut
  std::vector<cdouble> coarse = sample_and_analyze(chi, gc, f, K, 2 * K + 1);
  std::vector<cdouble> fine = sample_and_analyze(chi, gc, f, 2 * K, 4 * K + 1);

  double alias = 0.0;
  for (int k = -K; k <= K; ++k) {
    alias = std::max(alias, std::abs(coarse[k + K] - fine[k + 2 * K]));
  }
  if (alias > 1e-9) {
    throw AccuracyError("act: cutoff-doubling alias certificate failed",
                        coarse[K], fine[2 * K], alias);
  }
  TrigPolynomial out(K);
  for (int k = -K; k <= K; ++k) {
    cdouble c = fine[k + 2 * K];
    if (std::abs(c) > 0.0) out.set_coeff(k, c);
  }
  return out;
}

TrigPolynomial lie_derivative(Generator which, cdouble l, const TrigPolynomial& f) {
  TrigPolynomial out(f.cutoff() + 1);
  cdouble i(0.0, 1.0);
  for (const auto& [k, c] : f.coeffs()) {
    double kd = k;
    switch (which) {
      case Generator::J1:
        out.set_coeff(k - 1, out.coeff(k - 1) + 0.5 * (l + kd) * c);
        out.set_coeff(k + 1, out.coeff(k + 1) + 0.5 * (l - kd) * c);
        break;
      case Generator::J2:
        out.set_coeff(k - 1, out.coeff(k - 1) + 0.5 * i * (l + kd) * c);
        out.set_coeff(k + 1, out.coeff(k + 1) + 0.5 * i * (kd - l) * c);
        break;
      case Generator::J3:
        out.set_coeff(k, out.coeff(k) - i * kd * c);
        break;
    }
  }
  return out;
}

TrigPolynomial ladder(LadderSign sign, cdouble l, const TrigPolynomial& f) {
  TrigPolynomial out(f.cutoff() + 1);
  for (const auto& [k, c] : f.coeffs()) {
    double kd = k;
    if (sign == LadderSign::Plus) {
      out.set_coeff(k + 1, out.coeff(k + 1) + (kd - l) * c);
    } else {
      out.set_coeff(k - 1, out.coeff(k - 1) + (-kd - l) * c);
    }
  }
  return out;
}

TrigPolynomial flow_ladder(LadderSign sign, cdouble l, const TrigPolynomial& f) {
  TrigPolynomial j2 = lie_derivative(Generator::J2, l, f);
  TrigPolynomial j3 = lie_derivative(Generator::J3, l, f);
  return (sign == LadderSign::Plus) ? j3 - j2 : j3 + j2;
}

TrigPolynomial casimir(cdouble l, const TrigPolynomial& f) {
  TrigPolynomial j1 = lie_derivative(Generator::J1, l, lie_derivative(Generator::J1, l, f));
  TrigPolynomial j2 = lie_derivative(Generator::J2, l, lie_derivative(Generator::J2, l, f));
  TrigPolynomial j3 = lie_derivative(Generator::J3, l, lie_derivative(Generator::J3, l, f));
  TrigPolynomial out = j3;
  out -= j1;
  out -= j2;
  return out;
}

cdouble casimir_scalar(cdouble l) { return -l * (l + 1.0); }

}  // namespace hypflow
