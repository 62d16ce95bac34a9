#pragma once

#include <optional>

#include "cohkey/keyrate.hpp"

namespace cohkey {

// Diagonal Z-basis outcome frequencies plus the phase error rate; e_x/e_y are
// carried optionally for the six-state variant.
struct FineGrainedStats {
  double m00 = 0.0;
  double m11 = 0.0;
  double m22 = 0.0;
  double m33 = 0.0;
  double e_p = 0.0;
  std::optional<double> e_x;
  std::optional<double> e_y;

  double e_b() const { return m11 + m22; }
  void validate() const;  // nonnegative entries, unit sum, rates in range
};

// Minimizer of the coherence of the X-pattern state compatible with the
// statistics: a sits on the (0,3) anti-diagonal, b on the (1,2) inner block,
// a + b = 1/2 - e_p.
struct Problem1Solution {
  enum class Method { closed_form, numeric };
  double a_bar = 0.0;
  double b_bar = 0.0;
  Bits c_min = 0.0;
  Method method = Method::numeric;
};

// The X-pattern state with diagonal (m00,m11,m22,m33), real anti-diagonal
// entries a at (0,3)/(3,0) and b at (1,2)/(2,1).  NotPositive when either
// off-diagonal exceeds its geometric-mean bound.
TwoQubitState rho_of_ab(const FineGrainedStats& stats, double a, double b);

// Minimize C(rho(a, b)) subject to a + b = 1/2 - e_p and the PSD box.  Uses
// the closed form when the diagonal ratio condition m00/m33 = m11/m22 or
// m00/m33 = m22/m11 holds (relative tolerance 1e-9), else a 1001-point grid
// with golden-section refinement.  Infeasible when no admissible a exists.
Problem1Solution solve_problem1(const FineGrainedStats& stats);

// The numeric path unconditionally; exposed for cross-checks.
Problem1Solution solve_problem1_numeric(const FineGrainedStats& stats);

// Closed-form minimum under the ratio condition, parameterized by the block
// weight alpha = m00/(m00+m33): c_min = H(alpha) - H(1/2 + r) with
// r = sqrt((alpha-1/2)^2 + (1/2-e_p)^2).  OutOfRange when r > 1/2, i.e. no
// quantum state has that alpha/e_p combination.
Problem1Solution lemma2_closed_form(double alpha, double e_b, double e_p);

// rate = c_min - H(e_b); witness attains the minimum coherence.
KeyRateReport bb84_opt_keyrate(const FineGrainedStats& stats);

// Six-state refinement: rate = C(tau) - H(e_b) with tau the X-pattern state
// at a = (1-e_x-e_y)/2, b = (e_y-e_x)/2.  Requires e_x and e_y.
KeyRateReport sixstate_opt_keyrate(const FineGrainedStats& stats);

// Twirl toward balance: (S_ij rho S_ij + rho) / 2 with S_ij the swap of basis
// states i and j.  Never increases coherence.
TwoQubitState symmetrize(const TwoQubitState& rho, std::size_t i, std::size_t j);

}  // namespace cohkey
