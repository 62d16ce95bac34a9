#pragma once

#include <span>
#include <vector>

#include "cohkey/qstate.hpp"

namespace cohkey {

// All entropies and rates are in bits (log base 2).
using Bits = double;

// p * log2(p); arguments below 1e-300 count as exact zeros.
double plog2(double p);

// H(e) = -e log2 e - (1-e) log2 (1-e); e must lie in [0, 1].
Bits binary_entropy(double e);

// Shannon entropy of a probability vector.  Entries must be >= -1e-9 (tiny
// negatives read as 0) and sum to 1 within 1e-9; InvalidDistribution
// otherwise.
Bits shannon_entropy(std::span<const double> p);

// Spectrum of a density matrix: eigenvalues sorted descending, negatives in
// [-1e-9, 0) clipped to 0 and the rest renormalized to unit sum.  Eigenvalues
// below -1e-9 raise NotPositive.
std::vector<double> state_spectrum(const ComplexMatrix& rho);

// Von Neumann entropy S(rho).
Bits von_neumann_entropy(const ComplexMatrix& rho);
Bits von_neumann_entropy(const TwoQubitState& rho);

// Relative entropy of coherence in the computational basis, for a density
// matrix of any dimension: S(diag rho) - S(rho).
Bits coherence_z(const ComplexMatrix& rho);

// Coherence of a two-qubit state relative to the product basis named by the
// label.
Bits rel_entropy_coherence(const TwoQubitState& rho, BasisLabel basis);

// D(rho || sigma) = Tr rho log2 rho - Tr rho log2 sigma, evaluated through
// both eigensystems.  Returns +infinity when rho carries weight above 1e-10
// on a sigma eigenvector whose eigenvalue is below 1e-12.
Bits quantum_relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);

}  // namespace cohkey
