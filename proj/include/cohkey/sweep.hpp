#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "cohkey/csv.hpp"

namespace cohkey {

// A one-variable parameter scan: `variable` ranges over `steps` evenly spaced
// values in [start, stop] with everything in `fixed` held constant.
struct SweepSpec {
  std::string variable;
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 0;
  std::map<std::string, double> fixed;
  std::string output_path;

  void validate() const;  // steps >= 2, start < stop
};

// Columns alpha, K_bb84, K_bb84_opt, K_six, K_six_opt.  variable must be
// "alpha" and fixed must hold "e", the common error rate; the diagonal at
// each alpha follows m00/m33 = m22/m11 = alpha/(1-alpha).  InfeasibleAlpha
// when a grid point admits no quantum state.
CsvTable run_alpha_sweep(const SweepSpec& spec, std::size_t jobs);

// Columns x, K, K1, K2.  variable must be "x" and fixed must hold "ep" and
// "eb".
CsvTable run_mismatch_sweep(const SweepSpec& spec, std::size_t jobs);

}  // namespace cohkey
