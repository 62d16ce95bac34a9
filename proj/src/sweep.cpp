#include "cohkey/sweep.hpp"

#include <string>
#include <vector>

#include "cohkey/errors.hpp"
#include "cohkey/finegrained.hpp"
#include "cohkey/mismatch.hpp"
#include "cohkey/parallel.hpp"

namespace cohkey {

namespace {

double fixed_param(const SweepSpec& spec, const std::string& name) {
  auto it = spec.fixed.find(name);
  if (it == spec.fixed.end())
    throw OutOfRange("sweep: missing fixed parameter '" + name + "'");
  return it->second;
}

void check_variable(const SweepSpec& spec, const std::string& expect) {
  if (spec.variable != expect)
    throw OutOfRange("sweep: variable must be '" + expect + "', got '" + spec.variable + "'");
}

double grid_value(const SweepSpec& spec, std::size_t i) {
  return spec.start + (spec.stop - spec.start) * static_cast<double>(i) /
                          static_cast<double>(spec.steps - 1);
}

}  // namespace

void SweepSpec::validate() const {
  if (steps < 2) throw OutOfRange("sweep: steps = " + std::to_string(steps) + " must be >= 2");
  if (!(start < stop))
    throw OutOfRange("sweep: start " + std::to_string(start) + " must be below stop " +
                     std::to_string(stop));
}

CsvTable run_alpha_sweep(const SweepSpec& spec, std::size_t jobs) {
  spec.validate();
  check_variable(spec, "alpha");
  double e = fixed_param(spec, "e");

  CsvTable table;
  table.header = {"alpha", "K_bb84", "K_bb84_opt", "K_six", "K_six_opt"};
  table.rows.assign(spec.steps, {});
  parallel_for_indexed(spec.steps, jobs, [&](std::size_t i) {
    double alpha = grid_value(spec, i);
    FineGrainedStats stats;
    stats.m00 = alpha * (1.0 - e);
    stats.m11 = (1.0 - alpha) * e;
    stats.m22 = alpha * e;
    stats.m33 = (1.0 - alpha) * (1.0 - e);
    stats.e_p = e;
    stats.e_x = e;
    stats.e_y = e;
    try {
      table.rows[i] = {alpha, bb84_keyrate(e, e).rate, bb84_opt_keyrate(stats).rate,
                       sixstate_keyrate(e, e, e).rate, sixstate_opt_keyrate(stats).rate};
    } catch (const Infeasible& err) {
      throw InfeasibleAlpha("alpha = " + std::to_string(alpha) + " at e = " + std::to_string(e) +
                            ": " + err.what());
    } catch (const NotPositive& err) {
      throw InfeasibleAlpha("alpha = " + std::to_string(alpha) + " at e = " + std::to_string(e) +
                            ": " + err.what());
    }
  });
  return table;
}

CsvTable run_mismatch_sweep(const SweepSpec& spec, std::size_t jobs) {
  spec.validate();
  check_variable(spec, "x");
  double e_p = fixed_param(spec, "ep");
  double e_b = fixed_param(spec, "eb");

  CsvTable table;
  table.header = {"x", "K", "K1", "K2"};
  table.rows.assign(spec.steps, {});
  parallel_for_indexed(spec.steps, jobs, [&](std::size_t i) {
    double x = grid_value(spec, i);
    table.rows[i] = {x, mismatch_keyrate(x, e_p, e_b).rate, discard_keyrate_k1(x, e_p, e_b),
                     koashi_keyrate_k2(x, e_p, e_b)};
  });
  return table;
}

}  // namespace cohkey
