#include "hypflow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hypflow {
namespace oracle {

AccuracyCertificate quad_periodic(const std::function<cdouble(double)>& f,
                                  int levels, int base_points) {
  if (levels < 1) levels = 1;
  if (base_points < 4) base_points = 4;
  cdouble prev = 0.0, cur = 0.0;
  int n = base_points;
  for (int lev = 0; lev <= levels; ++lev) {
    KahanSum s;
    for (int j = 0; j < n; ++j) s.add(f(2.0 * kPi * j / n));
    prev = cur;
    cur = s.sum / static_cast<double>(n);
    n *= 2;
  }
  return AccuracyCertificate{cur, std::abs(cur - prev), levels};
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev estimate.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    nodes[i] = xm - xl * x;
    nodes[n - 1 - i] = xm + xl * x;
    weights[i] = 2.0 * xl / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

namespace {

double column_norm_sq(const Matrix& a, int j) {
  double s = 0.0;
  for (int i = 0; i < a.rows; ++i) s += std::norm(a.at(i, j));
  return s;
}

}  // namespace

SvdResult svd_small(const Matrix& a_in) {
  if (a_in.rows == 0 || a_in.cols == 0) {
    throw DomainError("svd_small: empty matrix");
  }
  if (a_in.rows > 64 || a_in.cols > 64) {
    throw DomainError("svd_small: matrix too large for the small-matrix SVD");
  }
  // Work on A (rows x cols), orthogonalize columns; if rows < cols operate on
  // the conjugate transpose and swap U/V at the end.
  bool transposed = a_in.rows < a_in.cols;
  Matrix a = a_in;
  if (transposed) {
    Matrix t(a_in.cols, a_in.rows);
    for (int i = 0; i < a_in.rows; ++i)
      for (int j = 0; j < a_in.cols; ++j) t.at(j, i) = std::conj(a_in.at(i, j));
    a = t;
  }
  int m = a.rows, n = a.cols;
  Matrix v(n, n);
  for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

  const double eps = 1e-30;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = column_norm_sq(a, p);
        double aqq = column_norm_sq(a, q);
        cdouble apq = 0.0;
        for (int i = 0; i < m; ++i) apq += std::conj(a.at(i, p)) * a.at(i, q);
        double scale = std::sqrt(app * aqq);
        if (std::abs(apq) <= eps + 1e-16 * scale) continue;
        off = std::max(off, std::abs(apq) / (scale + eps));
        // Unitary 2x2 rotation diagonalizing [[app, apq], [conj(apq), aqq]].
        cdouble phase = apq / std::abs(apq);
        double zeta = (aqq - app) / (2.0 * std::abs(apq));
        double t = (zeta >= 0 ? 1.0 : -1.0) /
                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = c * t;
        for (int i = 0; i < m; ++i) {
          cdouble ap = a.at(i, p), aq = a.at(i, q);
          a.at(i, p) = c * ap - s * std::conj(phase) * aq;
          a.at(i, q) = s * phase * ap + c * aq;
        }
        for (int i = 0; i < n; ++i) {
          cdouble vp = v.at(i, p), vq = v.at(i, q);
          v.at(i, p) = c * vp - s * std::conj(phase) * vq;
          v.at(i, q) = s * phase * vp + c * vq;
        }
      }
    }
    if (off < 1e-15) break;
  }

  std::vector<double> sigma(n);
  for (int j = 0; j < n; ++j) sigma[j] = std::sqrt(column_norm_sq(a, j));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return sigma[i] > sigma[j]; });

  SvdResult r;
  r.singular_values.resize(n);
  r.u = Matrix(m, n);
  r.v = Matrix(n, n);
  for (int jj = 0; jj < n; ++jj) {
    int j = order[jj];
    r.singular_values[jj] = sigma[j];
    for (int i = 0; i < n; ++i) r.v.at(i, jj) = v.at(i, j);
    if (sigma[j] > 0.0) {
      for (int i = 0; i < m; ++i) r.u.at(i, jj) = a.at(i, j) / sigma[j];
    }
  }
  if (transposed) std::swap(r.u, r.v);
  return r;
}

std::vector<cdouble> null_vector(const Matrix& a) {
  SvdResult r = svd_small(a);
  int k = static_cast<int>(r.singular_values.size()) - 1;
  std::vector<cdouble> x(a.cols);
  for (int i = 0; i < a.cols; ++i) x[static_cast<std::size_t>(i)] = r.v.at(i, k);
  return x;
}

std::vector<cdouble> least_squares(const Matrix& a, const std::vector<cdouble>& b) {
  if (static_cast<int>(b.size()) != a.rows) {
    throw DomainError("least_squares: dimension mismatch");
  }
  SvdResult r = svd_small(a);
  double cutoff = r.singular_values.empty() ? 0.0
                                            : r.singular_values[0] * 1e-13;
  std::vector<cdouble> x(a.cols, 0.0);
  int k = static_cast<int>(r.singular_values.size());
  for (int j = 0; j < k; ++j) {
    if (r.singular_values[j] <= cutoff) continue;
    cdouble proj = 0.0;
    for (int i = 0; i < a.rows; ++i) proj += std::conj(r.u.at(i, j)) * b[i];
    proj /= r.singular_values[j];
    for (int i = 0; i < a.cols; ++i) x[i] += proj * r.v.at(i, j);
  }
  return x;
}

std::vector<cdouble> expsum_fit(const std::vector<double>& ts,
                                const std::vector<cdouble>& ys,
                                const std::vector<cdouble>& exponents) {
  if (ts.size() != ys.size()) throw DomainError("expsum_fit: size mismatch");
  Matrix v(static_cast<int>(ts.size()), static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      v.at(static_cast<int>(i), static_cast<int>(j)) = std::exp(exponents[j] * ts[i]);
    }
  }
  return least_squares(v, ys);
}

double subspace_angle(const std::vector<cdouble>& u, const std::vector<cdouble>& v) {
  if (u.size() != v.size()) throw DomainError("subspace_angle: size mismatch");
  cdouble dot = 0.0;
  double nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += std::conj(u[i]) * v[i];
    nu += std::norm(u[i]);
    nv += std::norm(v[i]);
  }
  if (nu == 0.0 || nv == 0.0) return kPi / 2.0;
  double c = std::abs(dot) / std::sqrt(nu * nv);
  c = std::min(1.0, c);
  return std::acos(c);
}

}  // namespace oracle
}  // namespace hypflow
