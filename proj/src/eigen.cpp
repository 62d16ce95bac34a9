#include "cohkey/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cohkey {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (!m.is_square())
    throw DimensionMismatch("eigensystem of a non-square matrix");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  if (!m.is_hermitian(1e-12 * scale))
    throw NotHermitian("matrix deviates from Hermitian symmetry by more than " +
                       std::to_string(1e-12 * scale));

  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = 1e-13 * std::max(1.0, m.frobenius_norm());

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double beta = std::abs(apq);
        if (beta <= 1e-300) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double phi = std::arg(apq);
        const Complex eip(std::cos(phi), std::sin(phi));
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        // Zero a(p,q): rotation angle from tan(2t) = 2|a_pq| / (a_pp - a_qq).
        const double tau = (alpha - gamma) / (2.0 * beta);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::hypot(tau, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns: A <- A J, with J = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
        // on rows/cols (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + s * std::conj(eip) * akq;
          a(k, q) = -s * eip * akp + c * akq;
        }
        // Rows: A <- J^dagger A.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + s * eip * aqk;
          a(q, k) = -s * std::conj(eip) * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(eip) * vkq;
          v(k, q) = -s * eip * vkp + c * vkq;
        }
      }
    }
  }
  const double residual = off_diagonal_norm(a);
  if (residual > target)
    throw NoConvergence("Jacobi sweeps exhausted with off-diagonal norm " +
                        std::to_string(residual));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  Eigensystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigensystem(m).values;
}

}  // namespace cohkey
