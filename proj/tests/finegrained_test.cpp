#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "cohkey/errors.hpp"
#include "cohkey/finegrained.hpp"
#include "test_support.hpp"

using namespace cohkey;
using cohkey::testing::random_feasible_stats;
using cohkey::testing::random_ratio_stats;
using cohkey::testing::random_state;

namespace {

// Brute-force oracle for the coherence minimum.  The X-pattern matrix splits
// into two 2x2 blocks whose eigenvalues are written down directly, so this
// shares no code with the library eigensolver.  Scans a dense grid over the
// feasible interval, then zooms twice around the best point.
double oracle_objective(const FineGrainedStats& s, double a) {
  double b = (0.5 - s.e_p) - a;
  std::array<double, 4> diag = {s.m00, s.m11, s.m22, s.m33};
  double mid_o = 0.5 * (s.m00 + s.m33);
  double rad_o = std::sqrt(0.25 * (s.m00 - s.m33) * (s.m00 - s.m33) + a * a);
  double mid_i = 0.5 * (s.m11 + s.m22);
  double rad_i = std::sqrt(0.25 * (s.m11 - s.m22) * (s.m11 - s.m22) + b * b);
  std::array<double, 4> spec = {mid_o + rad_o, mid_o - rad_o, mid_i + rad_i,
                                mid_i - rad_i};
  double h_diag = 0.0;
  for (double v : diag) h_diag -= plog2(v);
  double h_spec = 0.0;
  for (double v : spec) h_spec -= plog2(std::max(v, 0.0));
  return h_diag - h_spec;
}

double oracle_c_min(const FineGrainedStats& s) {
  double c = 0.5 - s.e_p;
  double big_a = std::sqrt(s.m00 * s.m33);
  double big_b = std::sqrt(s.m11 * s.m22);
  double lo = std::max(-big_a, c - big_b);
  double hi = std::min(big_a, c + big_b);
  REQUIRE(lo <= hi + 1e-12);
  double best_a = lo;
  double best = oracle_objective(s, lo);
  auto scan = [&](double from, double to, int points) {
    for (int i = 0; i <= points; ++i) {
      double a = from + (to - from) * i / points;
      a = std::clamp(a, lo, hi);
      double v = oracle_objective(s, a);
      if (v < best) {
        best = v;
        best_a = a;
      }
    }
  };
  scan(lo, hi, 100000);
  double step = (hi - lo) / 100000.0;
  for (int round = 0; round < 3; ++round) {
    scan(best_a - step, best_a + step, 2000);
    step /= 1000.0;
  }
  return best;
}

FineGrainedStats balanced_stats(double e_b, double e_p) {
  FineGrainedStats s;
  s.m00 = (1.0 - e_b) / 2.0;
  s.m11 = e_b / 2.0;
  s.m22 = e_b / 2.0;
  s.m33 = (1.0 - e_b) / 2.0;
  s.e_p = e_p;
  return s;
}

FineGrainedStats alpha_stats(double alpha, double e) {
  FineGrainedStats s;
  s.m00 = alpha * (1.0 - e);
  s.m11 = (1.0 - alpha) * e;
  s.m22 = alpha * e;
  s.m33 = (1.0 - alpha) * (1.0 - e);
  s.e_p = e;
  return s;
}

}  // namespace

TEST_CASE("rho_of_ab builds the X-pattern state") {
  FineGrainedStats diag = balanced_stats(0.4, 0.1);
  TwoQubitState plain = rho_of_ab(diag, 0.0, 0.0);
  CHECK(std::abs(plain(0, 3)) == 0.0);
  CHECK(std::abs(plain(1, 2)) == 0.0);
  CHECK(plain(0, 0).real() == doctest::Approx(0.3));

  FineGrainedStats bell;
  bell.m00 = 0.5;
  bell.m33 = 0.5;
  TwoQubitState phi = rho_of_ab(bell, 0.5, 0.0);
  CHECK(phi.matrix().max_abs_diff(projector_onto(bell_ket(0))) <= 1e-14);

  FineGrainedStats wide;
  wide.m00 = 0.3;
  wide.m11 = 0.2;
  wide.m22 = 0.2;
  wide.m33 = 0.3;
  TwoQubitState full = rho_of_ab(wide, 0.3, 0.2);
  // Block eigenvalues: 0.3 +- 0.3 and 0.2 +- 0.2 give spectrum (0.6,0.4,0,0).
  CHECK(von_neumann_entropy(full) ==
        doctest::Approx(binary_entropy(0.4)).epsilon(1e-9));
  // H(diag) = 1 + H(0.4) for the pairwise-equal diagonal, so C = 1 exactly.
  CHECK(coherence_z(full.matrix()) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("rho_of_ab rejects off-diagonals outside the PSD box") {
  FineGrainedStats s = balanced_stats(0.4, 0.1);
  CHECK_THROWS_AS(rho_of_ab(s, 0.31, 0.0), NotPositive);
  CHECK_THROWS_AS(rho_of_ab(s, 0.0, 0.21), NotPositive);
}

TEST_CASE("solve_problem1 on symmetric statistics reduces to 1 - H(e_p)") {
  FineGrainedStats s = balanced_stats(0.03, 0.03);
  Problem1Solution sol = solve_problem1(s);
  CHECK(sol.method == Problem1Solution::Method::closed_form);
  CHECK(sol.c_min == doctest::Approx(1.0 - binary_entropy(0.03)).epsilon(1e-12));
  CHECK(sol.a_bar == doctest::Approx(0.97 * 0.47).epsilon(1e-12));
  CHECK(sol.b_bar == doctest::Approx(0.03 * 0.47).epsilon(1e-12));
}

TEST_CASE("solve_problem1 with e_p = 1/2 has zero budget") {
  FineGrainedStats s = balanced_stats(0.1, 0.5);
  Problem1Solution sol = solve_problem1(s);
  CHECK(sol.c_min == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sol.a_bar == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sol.b_bar == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("solve_problem1 unbalanced closed form") {
  Problem1Solution sol = solve_problem1(alpha_stats(0.6, 0.03));
  CHECK(sol.method == Problem1Solution::Method::closed_form);
  double r = std::sqrt(0.01 + 0.47 * 0.47);
  CHECK(sol.c_min ==
        doctest::Approx(binary_entropy(0.6) - binary_entropy(0.5 + r)).epsilon(1e-12));
  CHECK(sol.c_min == doctest::Approx(0.832442853758912).epsilon(1e-12));
}

TEST_CASE("solve_problem1 reports infeasible statistics") {
  FineGrainedStats s;
  s.m00 = 0.5;
  s.m33 = 0.5;
  s.e_p = 0.0;
  s.m11 = 0.0;
  s.m22 = 0.0;
  // Feasible: a = 1/2 exactly.  Now shrink the outer block so the budget
  // cannot be met.
  FineGrainedStats starved;
  starved.m00 = 0.9;
  starved.m11 = 0.05;
  starved.m22 = 0.0;
  starved.m33 = 0.05;
  starved.e_p = 0.0;
  CHECK_THROWS_AS(solve_problem1(starved), Infeasible);
  CHECK_NOTHROW(solve_problem1(s));
}

TEST_CASE("lemma2 closed form reference points") {
  Problem1Solution mid = lemma2_closed_form(0.5, 0.03, 0.03);
  CHECK(mid.c_min == doctest::Approx(1.0 - binary_entropy(0.03)).epsilon(1e-12));
  CHECK(mid.a_bar == doctest::Approx(0.97 * 0.47).epsilon(1e-12));
  CHECK(mid.b_bar == doctest::Approx(0.03 * 0.47).epsilon(1e-12));

  for (double alpha : {0.1, 0.35, 0.5, 0.8}) {
    Problem1Solution flat = lemma2_closed_form(alpha, 0.2, 0.5);
    CHECK(flat.c_min == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(flat.a_bar == doctest::Approx(0.0).epsilon(1e-12));
  }

  // alpha = 0.6 with e_p = 0 puts the entropy argument past 1: no state has
  // that combination, so the call must refuse.
  CHECK_THROWS_AS(lemma2_closed_form(0.6, 0.1, 0.0), OutOfRange);
  CHECK_THROWS_AS(lemma2_closed_form(-0.1, 0.1, 0.1), OutOfRange);
  CHECK_THROWS_AS(lemma2_closed_form(0.5, 1.1, 0.1), OutOfRange);
}

TEST_CASE("numeric solver matches the analytic-eigenvalue oracle") {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 50; ++k) {
    FineGrainedStats s = random_feasible_stats(rng);
    Problem1Solution sol = solve_problem1(s);
    double oracle = oracle_c_min(s);
    CHECK(std::abs(sol.c_min - oracle) <= 1e-7);
    // Invariants of the returned point.
    CHECK(std::abs(sol.a_bar + sol.b_bar - (0.5 - s.e_p)) <= 1e-10);
    CHECK(std::abs(sol.a_bar) <= std::sqrt(s.m00 * s.m33) + 1e-12);
    CHECK(std::abs(sol.b_bar) <= std::sqrt(s.m11 * s.m22) + 1e-12);
  }
}

TEST_CASE("closed form and numeric path agree under the ratio condition") {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 50; ++k) {
    FineGrainedStats s = random_ratio_stats(rng);
    Problem1Solution closed = solve_problem1(s);
    Problem1Solution numeric = solve_problem1_numeric(s);
    CHECK(closed.method == Problem1Solution::Method::closed_form);
    CHECK(std::abs(closed.c_min - numeric.c_min) <= 1e-8);
  }
}

TEST_CASE("solution splits the budget proportionally to the blocks") {
  std::mt19937_64 rng(83);
  for (int k = 0; k < 30; ++k) {
    FineGrainedStats s = random_ratio_stats(rng);
    double e_b = s.e_b();
    if (e_b < 1e-3 || e_b > 1.0 - 1e-3) continue;
    double c = 0.5 - s.e_p;
    if (std::abs(c) < 1e-3) continue;

    Problem1Solution sol = solve_problem1(s);
    CHECK(sol.a_bar * c >= -1e-10);
    CHECK(sol.b_bar * c >= -1e-10);
    CHECK(std::abs(std::abs(sol.a_bar) / (1.0 - e_b) - std::abs(sol.b_bar) / e_b) <=
          1e-8);

    // The grid minimizer locates the same point, up to the flatness of the
    // objective at its minimum (~sqrt of machine epsilon in a).
    Problem1Solution numeric = solve_problem1_numeric(s);
    CHECK(std::abs(numeric.a_bar - sol.a_bar) <= 1e-6);
  }
}

TEST_CASE("refined bb84 rate dominates the plain formula") {
  std::mt19937_64 rng(89);
  for (int k = 0; k < 100; ++k) {
    FineGrainedStats s = random_feasible_stats(rng);
    if (s.e_b() > 0.5 || s.e_p > 0.5) continue;
    KeyRateReport opt = bb84_opt_keyrate(s);
    KeyRateReport plain = bb84_keyrate(s.e_b(), s.e_p);
    CHECK(opt.rate >= plain.rate - 1e-9);
    CHECK(opt.protocol == "bb84-opt");
    CHECK(opt.witness.has_value());
  }
}

TEST_CASE("refined bb84 rate reduces to the plain formula on balanced stats") {
  for (double eb : {0.01, 0.03, 0.1}) {
    for (double ep : {0.01, 0.05, 0.2}) {
      KeyRateReport opt = bb84_opt_keyrate(balanced_stats(eb, ep));
      KeyRateReport plain = bb84_keyrate(eb, ep);
      CHECK(std::abs(opt.rate - plain.rate) <= 1e-9);
    }
  }
  KeyRateReport lifted = bb84_opt_keyrate(alpha_stats(0.62, 0.03));
  CHECK(lifted.rate == doctest::Approx(0.651756494672975).epsilon(1e-12));
  CHECK(lifted.rate > bb84_keyrate(0.03, 0.03).rate + 1e-4);
}

TEST_CASE("refined bb84 with e_p = 1/2 costs exactly the reconciliation") {
  FineGrainedStats s = balanced_stats(0.2, 0.5);
  KeyRateReport r = bb84_opt_keyrate(s);
  CHECK(r.rate == doctest::Approx(-binary_entropy(0.2)).epsilon(1e-12));
}

TEST_CASE("refined six-state rate dominates the plain formula") {
  FineGrainedStats sym = balanced_stats(0.03, 0.03);
  sym.e_x = 0.03;
  sym.e_y = 0.03;
  KeyRateReport opt = sixstate_opt_keyrate(sym);
  CHECK(std::abs(opt.rate - sixstate_keyrate(0.03, 0.03, 0.03).rate) <= 1e-9);
  CHECK(opt.protocol == "six-opt");

  FineGrainedStats clean;
  clean.m00 = 0.5;
  clean.m33 = 0.5;
  clean.e_x = 0.0;
  clean.e_y = 0.0;
  CHECK(sixstate_opt_keyrate(clean).rate == doctest::Approx(1.0).epsilon(1e-12));

  FineGrainedStats tilted = alpha_stats(0.62, 0.03);
  tilted.e_x = 0.03;
  tilted.e_y = 0.03;
  KeyRateReport lifted = sixstate_opt_keyrate(tilted);
  CHECK(lifted.rate == doctest::Approx(0.725553016752887).epsilon(1e-12));
  CHECK(lifted.rate > sixstate_keyrate(0.03, 0.03, 0.03).rate + 1e-4);

  FineGrainedStats missing = alpha_stats(0.62, 0.03);
  CHECK_THROWS_AS(sixstate_opt_keyrate(missing), OutOfRange);
}

TEST_CASE("six-state refinement beats the bb84 refinement") {
  std::mt19937_64 rng(97);
  int done = 0;
  while (done < 50) {
    FineGrainedStats s = random_feasible_stats(rng);
    if (s.e_b() > 0.5 || s.e_p > 0.5) continue;
    s.e_x = s.e_p;
    s.e_y = s.e_p;
    KeyRateReport six;
    try {
      six = sixstate_opt_keyrate(s);
    } catch (const NotPositive&) {
      continue;  // e_y = e_x statistics need not admit a state
    }
    ++done;
    CHECK(six.rate >= bb84_opt_keyrate(s).rate - 1e-9);
  }
}

TEST_CASE("symmetrize balances the diagonal and keeps the off-diagonals") {
  FineGrainedStats s = alpha_stats(0.6, 0.1);
  Problem1Solution sol = solve_problem1(s);
  TwoQubitState rho = rho_of_ab(s, sol.a_bar, sol.b_bar);
  TwoQubitState twirled = symmetrize(symmetrize(rho, 0, 3), 1, 2);
  double eb = s.e_b();
  CHECK(twirled(0, 0).real() == doctest::Approx((1.0 - eb) / 2.0).epsilon(1e-12));
  CHECK(twirled(1, 1).real() == doctest::Approx(eb / 2.0).epsilon(1e-12));
  CHECK(twirled(2, 2).real() == doctest::Approx(eb / 2.0).epsilon(1e-12));
  CHECK(twirled(3, 3).real() == doctest::Approx((1.0 - eb) / 2.0).epsilon(1e-12));
  CHECK(std::abs(twirled(0, 3) - rho(0, 3)) <= 1e-12);
  CHECK(std::abs(twirled(1, 2) - rho(1, 2)) <= 1e-12);
}

TEST_CASE("symmetrize fixes balanced states and never raises coherence") {
  FineGrainedStats s = balanced_stats(0.2, 0.1);
  Problem1Solution sol = solve_problem1(s);
  TwoQubitState rho = rho_of_ab(s, sol.a_bar, sol.b_bar);
  CHECK(symmetrize(rho, 0, 3).matrix().max_abs_diff(rho.matrix()) <= 1e-14);

  std::mt19937_64 rng(101);
  for (int k = 0; k < 1000; ++k) {
    TwoQubitState r = random_state(rng);
    std::size_t i = rng() % 4;
    std::size_t j = rng() % 4;
    if (i == j) j = (j + 1) % 4;
    Bits before = coherence_z(r.matrix());
    Bits after = coherence_z(symmetrize(r, i, j).matrix());
    CHECK(after <= before + 1e-9);
  }
}

TEST_CASE("symmetrize rejects bad indices") {
  std::mt19937_64 rng(103);
  TwoQubitState rho = random_state(rng);
  CHECK_THROWS_AS(symmetrize(rho, 1, 1), BadIndex);
  CHECK_THROWS_AS(symmetrize(rho, 0, 4), BadIndex);
}
