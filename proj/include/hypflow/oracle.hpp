#pragma once

#include <functional>
#include <vector>

#include "hypflow/numeric.hpp"

namespace hypflow {
namespace oracle {

/// Result of a self-refining computation: the finest value together with the
/// difference against the previous refinement level.
struct AccuracyCertificate {
  cdouble value{0.0};
  double error_estimate{0.0};
  int refinement_levels{1};
};

/// Periodic trapezoid quadrature of f over [0, 2pi), normalized by 1/(2pi).
/// Starts at base_points nodes and doubles `levels` times; the certificate
/// compares the last two levels.
AccuracyCertificate quad_periodic(const std::function<cdouble(double)>& f,
                                  int levels = 3, int base_points = 16);

/// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Dense complex matrix in row-major order.
struct Matrix {
  Matrix() = default;
  Matrix(int rows, int cols) : rows(rows), cols(cols), data(static_cast<std::size_t>(rows) * cols) {}
  int rows{0}, cols{0};
  std::vector<cdouble> data;
  cdouble& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  cdouble at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

struct SvdResult {
  std::vector<double> singular_values;      // descending
  Matrix u;                                 // rows x rank columns (left vectors)
  Matrix v;                                 // cols x rank columns (right vectors)
};

/// One-sided complex Jacobi SVD for matrices up to 32x32. Deterministic.
SvdResult svd_small(const Matrix& a);

/// Right singular vector for the smallest singular value.
std::vector<cdouble> null_vector(const Matrix& a);

/// Minimum-norm least-squares solution of A x = b via the Jacobi SVD.
std::vector<cdouble> least_squares(const Matrix& a, const std::vector<cdouble>& b);

/// Amplitudes a_j minimizing sum_i |sum_j a_j e^{lambda_j t_i} - y_i|^2.
std::vector<cdouble> expsum_fit(const std::vector<double>& ts,
                                const std::vector<cdouble>& ys,
                                const std::vector<cdouble>& exponents);

/// Angle in [0, pi/2] between complex vectors modulo scalar multiples.
double subspace_angle(const std::vector<cdouble>& u, const std::vector<cdouble>& v);

/// Flow derivative (F(h) - F(0)) / h of a curve of values in a vector space,
/// with one Richardson step: 2 D(h/2) - D(h). `flow` must be defined near 0.
template <typename V>
V flow_derivative(const std::function<V(double)>& flow, double h) {
  V base = flow(0.0);
  V d1 = (flow(h) - base) * (1.0 / h);
  V d2 = (flow(h / 2.0) - base) * (2.0 / h);
  return d2 * 2.0 - d1;
}

/// Plain central difference (f(h) - f(-h)) / (2h) for convergence studies.
template <typename V>
V central_difference(const std::function<V(double)>& flow, double h) {
  return (flow(h) - flow(-h)) * (1.0 / (2.0 * h));
}

}  // namespace oracle
}  // namespace hypflow
