#include "hypflow/special_functions.hpp"

#include <array>
#include <cmath>

namespace hypflow {

namespace {

// Lanczos g = 7 coefficient set.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,    -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,  12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

void check_pole(cdouble z) {
  if (z.real() <= 0.5 && std::abs(z.imag()) <= 1e-14) {
    double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z.real() - r) <= 1e-14) {
      throw PoleError("gamma: pole at nonpositive integer");
    }
  }
}

cdouble lanczos_positive(cdouble z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  cdouble x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cdouble t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

cdouble gamma(cdouble z) {
  check_pole(z);
  cdouble result;
  if (z.real() < 0.5) {
    // reflection: Gamma(z)Gamma(1-z) = pi / sin(pi z)
    result = kPi / (std::sin(kPi * z) * lanczos_positive(1.0 - z));
  } else {
    result = lanczos_positive(z);
  }
  if (!is_finite(result)) {
    throw PoleError("gamma: non-finite result (argument too close to a pole "
                    "or outside supported range)");
  }
  return result;
}

cdouble log_gamma(cdouble z) {
  check_pole(z);
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  cdouble zm = z - 1.0;
  cdouble x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm + static_cast<double>(i));
  cdouble t = zm + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(x);
}

cdouble binom(cdouble z, long k) {
  if (k < 0) return 0.0;
  cdouble prod = 1.0;
  for (long j = 0; j < k; ++j) {
    prod *= (z - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return prod;
}

}  // namespace hypflow
