#include "cohkey/finegrained.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cohkey/errors.hpp"

namespace cohkey {

namespace {

constexpr double kBoxSlack = 1e-12;

ComplexMatrix x_pattern_matrix(const FineGrainedStats& s, double a, double b) {
  ComplexMatrix m(4, 4);
  m(0, 0) = s.m00;
  m(1, 1) = s.m11;
  m(2, 2) = s.m22;
  m(3, 3) = s.m33;
  m(0, 3) = m(3, 0) = a;
  m(1, 2) = m(2, 1) = b;
  return m;
}

// Coherence of the X-pattern matrix via its two 2x2 blocks is left to the
// generic eigensolver so the numeric path stays independent of the algebra
// the closed form rests on.
Bits objective(const FineGrainedStats& s, double a, double b) {
  return coherence_z(x_pattern_matrix(s, a, b));
}

Problem1Solution golden_refine(const FineGrainedStats& s, double c, double lo, double hi) {
  constexpr int kGridPoints = 1001;
  double best_a = lo;
  Bits best_f = objective(s, lo, c - lo);
  for (int i = 1; i < kGridPoints; ++i) {
    double a = lo + (hi - lo) * i / (kGridPoints - 1);
    Bits f = objective(s, a, c - a);
    if (f < best_f) {
      best_f = f;
      best_a = a;
    }
  }
  double step = (hi - lo) / (kGridPoints - 1);
  double left = std::max(lo, best_a - step);
  double right = std::min(hi, best_a + step);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = right - kInvPhi * (right - left);
  double x2 = left + kInvPhi * (right - left);
  Bits f1 = objective(s, x1, c - x1);
  Bits f2 = objective(s, x2, c - x2);
  while (right - left > 1e-12) {
    if (f1 < f2) {
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - kInvPhi * (right - left);
      f1 = objective(s, x1, c - x1);
    } else {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + kInvPhi * (right - left);
      f2 = objective(s, x2, c - x2);
    }
  }
  double a = (left + right) / 2.0;
  Bits f = objective(s, a, c - a);
  if (best_f < f) {
    a = best_a;
    f = best_f;
  }
  Problem1Solution sol;
  sol.a_bar = a;
  sol.b_bar = c - a;
  sol.c_min = f;
  sol.method = Problem1Solution::Method::numeric;
  return sol;
}

struct FeasibleInterval {
  double lo;
  double hi;
};

FeasibleInterval feasible_interval(const FineGrainedStats& s) {
  double big_a = std::sqrt(s.m00 * s.m33);
  double big_b = std::sqrt(s.m11 * s.m22);
  double c = 0.5 - s.e_p;
  double lo = std::max(-big_a, c - big_b);
  double hi = std::min(big_a, c + big_b);
  if (lo > hi + kBoxSlack) {
    throw Infeasible(
        "solve_problem1: no admissible off-diagonal split: need |a| <= " + std::to_string(big_a) +
        " and |" + std::to_string(c) + " - a| <= " + std::to_string(big_b) +
        ", but the intersection [" + std::to_string(lo) + ", " + std::to_string(hi) +
        "] is empty");
  }
  return {std::min(lo, hi), hi};
}

bool ratio_condition(const FineGrainedStats& s) {
  // m00/m33 = m11/m22 or m00/m33 = m22/m11, written as cross products so the
  // degenerate zero-block cases come out right.
  double t1 = s.m00 * s.m22;
  double t2 = s.m11 * s.m33;
  double u1 = s.m00 * s.m11;
  double u2 = s.m22 * s.m33;
  double scale1 = std::max(std::abs(t1), std::abs(t2));
  double scale2 = std::max(std::abs(u1), std::abs(u2));
  return std::abs(t1 - t2) <= 1e-9 * scale1 || std::abs(u1 - u2) <= 1e-9 * scale2;
}

}  // namespace

void FineGrainedStats::validate() const {
  const double entries[4] = {m00, m11, m22, m33};
  const char* names[4] = {"m00", "m11", "m22", "m33"};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (entries[i] < -1e-12)
      throw InvalidDistribution("FineGrainedStats: " + std::string(names[i]) + " = " +
                                std::to_string(entries[i]) + " is negative");
    sum += entries[i];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidDistribution("FineGrainedStats: diagonal sums to " + std::to_string(sum));
  if (e_p < -1e-12 || e_p > 1.0 + 1e-12)
    throw OutOfRange("FineGrainedStats: e_p = " + std::to_string(e_p) + " outside [0, 1]");
  for (const auto& [name, value] : {std::pair{"e_x", e_x}, std::pair{"e_y", e_y}}) {
    if (value && (*value < -1e-12 || *value > 1.0 + 1e-12))
      throw OutOfRange("FineGrainedStats: " + std::string(name) + " = " +
                       std::to_string(*value) + " outside [0, 1]");
  }
}

TwoQubitState rho_of_ab(const FineGrainedStats& stats, double a, double b) {
  stats.validate();
  double big_a = std::sqrt(std::max(stats.m00 * stats.m33, 0.0));
  double big_b = std::sqrt(std::max(stats.m11 * stats.m22, 0.0));
  if (std::abs(a) > big_a + kBoxSlack)
    throw NotPositive("rho_of_ab: |a| = " + std::to_string(std::abs(a)) +
                      " exceeds sqrt(m00*m33) = " + std::to_string(big_a));
  if (std::abs(b) > big_b + kBoxSlack)
    throw NotPositive("rho_of_ab: |b| = " + std::to_string(std::abs(b)) +
                      " exceeds sqrt(m11*m22) = " + std::to_string(big_b));
  return make_state(x_pattern_matrix(stats, a, b));
}

Problem1Solution solve_problem1_numeric(const FineGrainedStats& stats) {
  stats.validate();
  FeasibleInterval box = feasible_interval(stats);
  double c = 0.5 - stats.e_p;
  if (box.hi - box.lo < 1e-14) {
    Problem1Solution sol;
    sol.a_bar = (box.lo + box.hi) / 2.0;
    sol.b_bar = c - sol.a_bar;
    sol.c_min = objective(stats, sol.a_bar, sol.b_bar);
    sol.method = Problem1Solution::Method::numeric;
    return sol;
  }
  return golden_refine(stats, c, box.lo, box.hi);
}

Problem1Solution solve_problem1(const FineGrainedStats& stats) {
  stats.validate();
  FeasibleInterval box = feasible_interval(stats);
  double c = 0.5 - stats.e_p;
  if (ratio_condition(stats)) {
    double outer = stats.m00 + stats.m33;
    double inner = stats.m11 + stats.m22;
    double alpha = outer > 1e-300 ? stats.m00 / outer : stats.m11 / inner;
    double r = std::hypot(alpha - 0.5, c);
    double a_bar = (1.0 - stats.e_b()) * c;
    double b_bar = stats.e_b() * c;
    bool in_box = a_bar >= box.lo - kBoxSlack && a_bar <= box.hi + kBoxSlack;
    if (r <= 0.5 + kBoxSlack && in_box) {
      Problem1Solution sol;
      sol.a_bar = a_bar;
      sol.b_bar = b_bar;
      sol.c_min = binary_entropy(alpha) - binary_entropy(std::min(0.5 + r, 1.0));
      sol.method = Problem1Solution::Method::closed_form;
      return sol;
    }
    // Ratio held only within tolerance and the closed-form point fell
    // outside the box: defer to the numeric path.
  }
  return golden_refine(stats, c, box.lo, box.hi);
}

Problem1Solution lemma2_closed_form(double alpha, double e_b, double e_p) {
  if (alpha < -1e-12 || alpha > 1.0 + 1e-12)
    throw OutOfRange("lemma2_closed_form: alpha = " + std::to_string(alpha) + " outside [0, 1]");
  if (e_b < -1e-12 || e_b > 1.0 + 1e-12)
    throw OutOfRange("lemma2_closed_form: e_b = " + std::to_string(e_b) + " outside [0, 1]");
  if (e_p < -1e-12 || e_p > 1.0 + 1e-12)
    throw OutOfRange("lemma2_closed_form: e_p = " + std::to_string(e_p) + " outside [0, 1]");
  alpha = std::clamp(alpha, 0.0, 1.0);
  double c = 0.5 - e_p;
  double r = std::hypot(alpha - 0.5, c);
  if (r > 0.5 + 1e-12)
    throw OutOfRange("lemma2_closed_form: no state has alpha = " + std::to_string(alpha) +
                     " with e_p = " + std::to_string(e_p) +
                     " (entropy argument 1/2 + r = " + std::to_string(0.5 + r) + " exceeds 1)");
  Problem1Solution sol;
  sol.a_bar = (1.0 - e_b) * c;
  sol.b_bar = e_b * c;
  sol.c_min = binary_entropy(alpha) - binary_entropy(std::min(0.5 + r, 1.0));
  sol.method = Problem1Solution::Method::closed_form;
  return sol;
}

KeyRateReport bb84_opt_keyrate(const FineGrainedStats& stats) {
  Problem1Solution sol = solve_problem1(stats);
  KeyRateReport r;
  r.protocol = "bb84-opt";
  r.coherence_term = sol.c_min;
  r.reconciliation_term = binary_entropy(stats.e_b());
  r.rate = r.coherence_term - r.reconciliation_term;
  r.secure = r.rate > 0.0;
  r.witness = rho_of_ab(stats, sol.a_bar, sol.b_bar);
  return r;
}

KeyRateReport sixstate_opt_keyrate(const FineGrainedStats& stats) {
  stats.validate();
  if (!stats.e_x || !stats.e_y)
    throw OutOfRange("sixstate_opt_keyrate: stats carry no e_x/e_y");
  double a = (1.0 - *stats.e_x - *stats.e_y) / 2.0;
  double b = (*stats.e_y - *stats.e_x) / 2.0;
  TwoQubitState tau = [&] {
    try {
      return rho_of_ab(stats, a, b);
    } catch (const NotPositive& err) {
      throw NotPositive("sixstate_opt_keyrate: statistics admit no quantum state: " +
                        std::string(err.what()));
    }
  }();
  KeyRateReport r;
  r.protocol = "six-opt";
  r.coherence_term = coherence_z(tau.matrix());
  r.reconciliation_term = binary_entropy(stats.e_b());
  r.rate = r.coherence_term - r.reconciliation_term;
  r.secure = r.rate > 0.0;
  r.witness = tau;
  return r;
}

TwoQubitState symmetrize(const TwoQubitState& rho, std::size_t i, std::size_t j) {
  if (i > 3 || j > 3 || i == j)
    throw BadIndex("symmetrize: indices must be distinct and in 0..3");
  ComplexMatrix s = ComplexMatrix::identity(4);
  s(i, i) = 0.0;
  s(j, j) = 0.0;
  s(i, j) = 1.0;
  s(j, i) = 1.0;
  ComplexMatrix out = 0.5 * (s * rho.matrix() * s) + 0.5 * rho.matrix();
  return make_state(out);
}

}  // namespace cohkey
