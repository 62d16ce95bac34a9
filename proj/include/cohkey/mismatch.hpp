#pragma once

#include <array>

#include "cohkey/keyrate.hpp"

namespace cohkey {

// A pair of detector efficiencies on the receiving side; x is the mismatch
// ratio eta0/(eta0+eta1).
struct DetectorModel {
  double eta0 = 1.0;
  double eta1 = 1.0;

  double x() const { return eta0 / (eta0 + eta1); }
  void validate() const;  // efficiencies must lie in (0, 1]
};

// Outcome frequencies of a product-basis measurement (Z or X) behind the
// detectors, indexed |00>, |01>, |10>, |11>.
struct ObservedDiag {
  BasisLabel basis = BasisLabel::Z;
  std::array<double, 4> m_hat = {0.0, 0.0, 0.0, 0.0};

  void validate() const;
};

// Single-qubit filter whose square is the detection POVM element:
// sqrt(eta0) P0 + sqrt(eta1) P1 with P the named basis projectors.  Only Z
// and X filters exist.
ComplexMatrix filter_op(BasisLabel basis, const DetectorModel& det);

// (1 (x) F) rho (1 (x) F), renormalized; the filter acts on the second
// subsystem.  VanishingNorm when the acceptance probability is below 1e-12.
TwoQubitState filtered_state(const TwoQubitState& rho, BasisLabel basis, const DetectorModel& det);

// Outcome frequencies the detectors actually report: basis measurement on the
// filtered state.
ObservedDiag observed_diag(const TwoQubitState& rho, BasisLabel basis, const DetectorModel& det);

// Acceptance probability recovered from observed frequencies:
// 1 / (m0/eta0 + m1/eta1 + m2/eta0 + m3/eta1), the efficiency pattern
// following the second qubit's bit.
double gamma_from_observed(const ObservedDiag& obs, const DetectorModel& det);

// Phase error of the unfiltered state, recovered from X-basis observations:
// Gamma' * (m1/eta1 + m2/eta0).
double phase_error_double_prime(const ObservedDiag& obs_x, const DetectorModel& det);

// Phase error of the Z-filtered state:
// 1/2 - (sqrt(eta0 eta1)/gamma) * (1/2 - e_pp).
double corrected_phase_error(double gamma, double e_pp, const DetectorModel& det);

// Symmetric-attack rate K = H(x) - H(f) - H(e_b) with
// f = 1/2 + sqrt((1/2-x)^2 + x(1-x)(1-2 e_p)^2); x in (0,1), rates in [0,1/2].
KeyRateReport mismatch_keyrate(double x, double e_p, double e_b);

// Rate after discarding data to equalize the detectors:
// 2 min(x,1-x) (1 - H(e_p) - H(e_b)).
Bits discard_keyrate_k1(double x, double e_p, double e_b);

// Complementarity-based rate: 2 min(x,1-x) (1 - H(e_p)) - H(e_b).
Bits koashi_keyrate_k2(double x, double e_p, double e_b);

// Full estimation chain from a state and detector pair: observe Z and X
// frequencies, recover gamma and the corrected phase error, then run the
// fine-grained optimizer on the Z-filtered statistics.
KeyRateReport mismatch_pipeline(const TwoQubitState& rho, const DetectorModel& det);

}  // namespace cohkey
