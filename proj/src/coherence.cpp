#include "cohkey/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cohkey/eigen.hpp"
#include "cohkey/errors.hpp"

namespace cohkey {

double plog2(double p) {
  if (p < 1e-300) return 0.0;
  return p * std::log2(p);
}

Bits binary_entropy(double e) {
  if (e < -1e-12 || e > 1.0 + 1e-12)
    throw OutOfRange("binary_entropy: argument " + std::to_string(e) + " outside [0, 1]");
  e = std::clamp(e, 0.0, 1.0);
  return -plog2(e) - plog2(1.0 - e);
}

Bits shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  Bits h = 0.0;
  for (double v : p) {
    if (v < -1e-9)
      throw InvalidDistribution("shannon_entropy: negative probability " + std::to_string(v));
    if (v > 0.0) h -= plog2(v);
    sum += std::max(v, 0.0);
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidDistribution("shannon_entropy: probabilities sum to " + std::to_string(sum));
  return h;
}

std::vector<double> state_spectrum(const ComplexMatrix& rho) {
  std::vector<double> ev = hermitian_eigenvalues(rho);
  double sum = 0.0;
  for (double& v : ev) {
    if (v < -1e-9)
      throw NotPositive("state_spectrum: eigenvalue " + std::to_string(v) + " below -1e-9");
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (sum <= 0.0) throw NotPositive("state_spectrum: spectrum sums to zero");
  for (double& v : ev) v /= sum;
  return ev;
}

Bits von_neumann_entropy(const ComplexMatrix& rho) {
  Bits h = 0.0;
  for (double v : state_spectrum(rho)) h -= plog2(v);
  return h;
}

Bits von_neumann_entropy(const TwoQubitState& rho) { return von_neumann_entropy(rho.matrix()); }

Bits coherence_z(const ComplexMatrix& rho) {
  if (!rho.is_square()) throw DimensionMismatch("coherence_z: matrix not square");
  std::vector<double> diag(rho.rows());
  double sum = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i) {
    double d = rho(i, i).real();
    if (d < -1e-9)
      throw NotPositive("coherence_z: diagonal entry " + std::to_string(d) + " below -1e-9");
    diag[i] = std::max(d, 0.0);
    sum += diag[i];
  }
  if (sum <= 0.0) throw NotPositive("coherence_z: diagonal sums to zero");
  Bits hd = 0.0;
  for (double& v : diag) {
    v /= sum;
    hd -= plog2(v);
  }
  return hd - von_neumann_entropy(rho);
}

Bits rel_entropy_coherence(const TwoQubitState& rho, BasisLabel basis) {
  if (basis == BasisLabel::Z) return coherence_z(rho.matrix());
  // Rotate the named product basis onto the computational one.
  ComplexMatrix u(2, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    ComplexMatrix ket = basis_ket(basis, k);
    u(k, 0) = std::conj(ket(0, 0));
    u(k, 1) = std::conj(ket(1, 0));
  }
  ComplexMatrix uu = kron(u, u);
  return coherence_z(uu * rho.matrix() * uu.adjoint());
}

Bits quantum_relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (!rho.is_square() || rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw DimensionMismatch("quantum_relative_entropy: dimension mismatch");
  Eigensystem er = hermitian_eigensystem(rho);
  Eigensystem es = hermitian_eigensystem(sigma);
  const std::size_t n = rho.rows();

  Bits tr_rho_log_rho = 0.0;
  for (double v : er.values) tr_rho_log_rho += plog2(std::max(v, 0.0));

  // Tr rho log2 sigma = sum_j <s_j| rho |s_j> log2 mu_j.
  Bits tr_rho_log_sigma = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double mu = es.values[j];
    double w = 0.0;  // <s_j| rho |s_j>
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        w += (std::conj(es.vectors(a, j)) * rho(a, b) * es.vectors(b, j)).real();
    if (mu < 1e-12) {
      if (w > 1e-10) return std::numeric_limits<double>::infinity();
      continue;  // negligible weight on a null direction
    }
    tr_rho_log_sigma += w * std::log2(mu);
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

}  // namespace cohkey
