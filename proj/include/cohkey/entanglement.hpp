#pragma once

#include <cstdint>

#include "cohkey/coherence.hpp"
#include "cohkey/qstate.hpp"

namespace cohkey {

// Controls for the local-basis search: random restarts on top of the
// computational and marginal-eigenbasis seeds, each polished by direct
// simplex descent over the six Euler angles.
struct BasisSearchConfig {
  std::size_t restarts = 32;
  std::size_t max_iterations = 400;
  double tolerance = 1e-9;
  std::uint64_t seed = 0x5EEDCAFEULL;
  std::size_t jobs = 1;

  void validate() const;  // restarts >= 1, tolerance > 0
};

struct BasisSearchResult {
  Bits rate = 0.0;
  ComplexMatrix u_alice;
  ComplexMatrix u_bob;
};

// S(second marginal of Phi(rho)) - S(Phi(rho)): distillation upper bound on
// the key rate of the dephased state.
Bits hashing_bound(const TwoQubitState& rho);

// Pinch the first qubit's index: keep the 2x2 diagonal blocks, zero the rest.
ComplexMatrix dephase_alice(const ComplexMatrix& rho);

// Eve's uncertainty about Alice's Z outcome: D(rho || dephase_alice(rho)).
Bits devetak_winter_privacy(const TwoQubitState& rho);

// Best found value of C(Phi(sigma)) - H(e_b(sigma)) over local rotations
// sigma = (uA (x) uB) rho (uA (x) uB)^dagger, with the achieving unitaries.
// A heuristic lower bound on the true basis-optimized rate.
BasisSearchResult max_keyrate_over_bases(const TwoQubitState& rho, const BasisSearchConfig& cfg);

// Wootters concurrence of a two-qubit state.
double concurrence(const TwoQubitState& rho);

// H(1/2 + sqrt(1 - C^2)/2) with C the concurrence.
Bits entanglement_of_formation(const TwoQubitState& rho);

}  // namespace cohkey
