#pragma once

#include "hypflow/numeric.hpp"

namespace hypflow {

/// Complex gamma function (Lanczos, g = 7, 9 coefficients; reflection for
/// Re z < 1/2). Relative accuracy ~1e-13 for |z| <= 50.
/// Throws PoleError when z is within 1e-14 of a nonpositive integer.
cdouble gamma(cdouble z);

/// log Gamma on the principal branch, same parameter range as gamma().
cdouble log_gamma(cdouble z);

/// Generalized binomial coefficient C(z, k) = z(z-1)...(z-k+1)/k! computed
/// as the falling product. C(z, k) = 0 for k < 0, C(z, 0) = 1.
cdouble binom(cdouble z, long k);

}  // namespace hypflow
