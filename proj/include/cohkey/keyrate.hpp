#pragma once

#include <optional>
#include <string>

#include "cohkey/coherence.hpp"
#include "cohkey/qstate.hpp"

namespace cohkey {

// Measured error rates of a two-qubit state in the three conjugate bases.
struct ErrorRates {
  double e_x = 0.0;
  double e_y = 0.0;
  double e_z = 0.0;
};

ErrorRates error_rates(const TwoQubitState& rho);

// A key rate together with the two terms it splits into.  rate is exactly
// coherence_term - reconciliation_term; secure means rate > 0.  witness, when
// present, is a state attaining the bound.
struct KeyRateReport {
  std::string protocol;
  Bits rate = 0.0;
  Bits coherence_term = 0.0;
  Bits reconciliation_term = 0.0;
  bool secure = false;
  std::optional<TwoQubitState> witness;
};

// Distillable key of a known state: C(Phi(rho)) minus the given error
// correction cost.
KeyRateReport keyrate_of_state(const TwoQubitState& rho, Bits iec);

// 1 - H(e_p) - H(e_b); both rates must lie in [0, 1/2].
KeyRateReport bb84_keyrate(double e_b, double e_p);

// The state minimizing C(Phi(rho)) under the bit/phase error constraints:
// Bell-diagonal with independent bit and phase error placement.
TwoQubitState bb84_worstcase_state(double e_b, double e_p);

// 1 - H({p}) with the Bell weights reconstructed from the three error rates.
KeyRateReport sixstate_keyrate(double e_x, double e_y, double e_z);

}  // namespace cohkey
