#pragma once

#include <array>

#include "cohkey/complex_matrix.hpp"
#include "cohkey/eigen.hpp"

namespace cohkey {

// Measurement basis of a single qubit; product bases on two qubits reuse the
// same label on both sides.
enum class BasisLabel { Z, X, Y };

const char* basis_name(BasisLabel b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();

// Basis kets as 2x1 columns: index 0 is |0>, |+>, |+i> and index 1 is |1>,
// |->, |-i> for Z, X, Y.
ComplexMatrix basis_ket(BasisLabel b, int index);

// Rz(alpha) Ry(beta) Rz(gamma); covers every single-qubit rotation up to a
// global phase.
ComplexMatrix qubit_unitary(double alpha, double beta, double gamma);

// Recovers Euler angles (alpha, beta, gamma) with qubit_unitary(result) equal
// to u up to global phase.
std::array<double, 3> euler_angles_of(const ComplexMatrix& u);

// Validated two-qubit density matrix.  Basis order is |00>, |01>, |10>, |11>
// with Alice's qubit first.  Instances are immutable.
class TwoQubitState {
 public:
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::array<double, 4> diagonal() const;

  friend TwoQubitState make_state(const ComplexMatrix& m);

 private:
  explicit TwoQubitState(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

// Validates and wraps a 4x4 density matrix: Hermitian within 1e-12 entrywise,
// trace within 1e-12 of 1, eigenvalues >= -1e-9 (tiny negatives are tolerated
// here and clipped later, inside entropy evaluations).  Throws NotHermitian,
// TraceNotOne or NotPositive.
TwoQubitState make_state(const ComplexMatrix& m);

// Rank-one conveniences.
TwoQubitState pure_state(const ComplexMatrix& ket);

struct ParityProjectors {
  BasisLabel basis;
  ComplexMatrix plus;   // "same parity" subspace
  ComplexMatrix minus;  // error subspace measured by e_x / e_y / e_z
};

// Rank-two projectors splitting the basis into agree/disagree outcome pairs.
// Z and X pair aligned kets under the
// plus projector; Y intentionally pairs ANTI-aligned kets under plus
// (|+i,-i>, |-i,+i>), which is what makes a Bell Phi+ state register zero
// e_y.  Do not "fix" the asymmetry.
ParityProjectors parity_projectors(BasisLabel basis);

// Parity dephasing Pi+ rho Pi+ + Pi- rho Pi- in the Z parity decomposition:
// keeps the diagonal plus the (0,3) and (1,2) coherences, zeroes the rest.
TwoQubitState partial_dephase(const TwoQubitState& rho);
ComplexMatrix partial_dephase_raw(const ComplexMatrix& rho);

// Diagonal of rho in the product basis of the given label, as probabilities.
std::array<double, 4> full_dephase(const TwoQubitState& rho, BasisLabel basis);
std::array<double, 4> full_dephase_raw(const ComplexMatrix& rho, BasisLabel basis);

// Traces out Alice (keeps Bob's 2x2 marginal) and vice versa.
ComplexMatrix partial_trace_A(const TwoQubitState& rho);
ComplexMatrix partial_trace_B(const TwoQubitState& rho);

// (uA (x) uB) rho (uA (x) uB)^dagger.  Both factors must be unitary within
// 1e-10; throws NotUnitary.
TwoQubitState local_rotate(const TwoQubitState& rho, const ComplexMatrix& u_alice,
                           const ComplexMatrix& u_bob);

// Bell-basis mixing weights (Phi+, Phi-, Psi+, Psi-).
struct BellProbs {
  double p0, p1, p2, p3;

  // Throws InvalidDistribution unless entries are >= -1e-12 and sum to 1
  // within 1e-9; tiny negatives read as 0.
  void validate() const;

  double e_x() const { return p1 + p3; }
  double e_y() const { return p1 + p2; }
  double e_z() const { return p2 + p3; }
};

// Bell kets: 0 -> Phi+, 1 -> Phi-, 2 -> Psi+, 3 -> Psi-.
ComplexMatrix bell_ket(int index);

TwoQubitState bell_diagonal(const BellProbs& probs);

}  // namespace cohkey
