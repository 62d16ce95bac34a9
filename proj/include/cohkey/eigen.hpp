#pragma once

#include <vector>

#include "cohkey/complex_matrix.hpp"

namespace cohkey {

struct Eigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // unitary; column k pairs with values[k]
};

// Diagonalizes a Hermitian matrix by cyclic Jacobi rotations with complex
// Givens angles.  Sweeps run until the off-diagonal Frobenius norm falls below
// 1e-13 (relative to the input norm) and give up after 100 sweeps with
// NoConvergence.  Input must be Hermitian within 1e-12 entrywise, scaled by
// the largest entry; NotHermitian otherwise.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace cohkey
