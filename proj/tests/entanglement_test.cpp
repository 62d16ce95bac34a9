#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "cohkey/entanglement.hpp"
#include "cohkey/errors.hpp"
#include "cohkey/keyrate.hpp"
#include "test_support.hpp"

using namespace cohkey;
using cohkey::testing::random_product_mixture;
using cohkey::testing::random_product_pure;
using cohkey::testing::random_schmidt_pure;
using cohkey::testing::random_state;
using cohkey::testing::random_unitary2;

namespace {

Bits fixed_basis_rate(const TwoQubitState& rho) {
  return keyrate_of_state(rho, binary_entropy(error_rates(rho).e_z)).rate;
}

BasisSearchConfig quick_cfg() {
  BasisSearchConfig cfg;
  cfg.restarts = 8;
  return cfg;
}

TwoQubitState mix(const TwoQubitState& a, const TwoQubitState& b, double lambda) {
  ComplexMatrix m = a.matrix();
  m *= Complex(lambda, 0.0);
  ComplexMatrix n = b.matrix();
  n *= Complex(1.0 - lambda, 0.0);
  m += n;
  return make_state(m);
}

TwoQubitState werner(double p) {
  ComplexMatrix m = projector_onto(bell_ket(0));
  m *= Complex(p, 0.0);
  ComplexMatrix id = ComplexMatrix::identity(4);
  id *= Complex((1.0 - p) / 4.0, 0.0);
  m += id;
  return make_state(m);
}

}  // namespace

TEST_CASE("hashing bound reference values") {
  CHECK(hashing_bound(make_state(projector_onto(bell_ket(0)))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  ComplexMatrix quarter = ComplexMatrix::identity(4);
  quarter *= Complex(0.25, 0.0);
  CHECK(hashing_bound(make_state(quarter)) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("hashing bound dominates the per-state rate") {
  std::mt19937_64 rng(139);
  for (int k = 0; k < 1000; ++k) {
    TwoQubitState rho = random_state(rng);
    CHECK(fixed_basis_rate(rho) <= hashing_bound(rho) + 1e-9);
  }
}

TEST_CASE("privacy term reference values") {
  ComplexMatrix d(4, 4);
  d(0, 0) = 0.4;
  d(1, 1) = 0.3;
  d(2, 2) = 0.2;
  d(3, 3) = 0.1;
  CHECK(devetak_winter_privacy(make_state(d)) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(devetak_winter_privacy(make_state(projector_onto(bell_ket(0)))) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("privacy of the dephased state equals its coherence") {
  std::mt19937_64 rng(149);
  for (int k = 0; k < 1000; ++k) {
    TwoQubitState phi = partial_dephase(random_state(rng));
    Bits via_privacy = devetak_winter_privacy(phi);
    Bits via_coherence = rel_entropy_coherence(phi, BasisLabel::Z);
    CHECK(std::abs(via_privacy - via_coherence) <= 1e-9);
  }
}

TEST_CASE("dephase_alice keeps exactly the A-diagonal blocks") {
  std::mt19937_64 rng(151);
  TwoQubitState rho = random_state(rng);
  ComplexMatrix out = dephase_alice(rho.matrix());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i / 2 == j / 2)
        CHECK(std::abs(out(i, j) - rho(i, j)) <= 1e-15);
      else
        CHECK(std::abs(out(i, j)) == 0.0);
    }
  CHECK_THROWS_AS(dephase_alice(ComplexMatrix::identity(2)), DimensionMismatch);
}

TEST_CASE("basis search recovers the entanglement entropy of pure states") {
  std::mt19937_64 rng(157);
  for (double lambda : {0.5, 0.7, 0.9, 0.99}) {
    TwoQubitState psi = random_schmidt_pure(rng, lambda);
    BasisSearchResult found = max_keyrate_over_bases(psi, quick_cfg());
    CHECK(std::abs(found.rate - binary_entropy(lambda)) <= 1e-6);
  }
}

TEST_CASE("basis search reports zero for product pure states") {
  std::mt19937_64 rng(163);
  for (int k = 0; k < 5; ++k) {
    TwoQubitState psi = make_state(random_product_pure(rng));
    BasisSearchResult found = max_keyrate_over_bases(psi, quick_cfg());
    CHECK(std::abs(found.rate) <= 1e-6);
  }
}

TEST_CASE("basis search undoes local rotations of the Bell state") {
  std::mt19937_64 rng(167);
  for (int k = 0; k < 5; ++k) {
    TwoQubitState hidden = local_rotate(make_state(projector_onto(bell_ket(0))),
                                        random_unitary2(rng), random_unitary2(rng));
    BasisSearchResult found = max_keyrate_over_bases(hidden, quick_cfg());
    CHECK(std::abs(found.rate - 1.0) <= 1e-6);
    // The returned unitaries reproduce the reported rate.
    TwoQubitState turned = local_rotate(hidden, found.u_alice, found.u_bob);
    CHECK(std::abs(fixed_basis_rate(turned) - found.rate) <= 1e-9);
  }
}

TEST_CASE("basis search result never beats the EoF bound") {
  std::mt19937_64 rng(173);
  for (int k = 0; k < 50; ++k) {
    TwoQubitState rho = random_state(rng);
    BasisSearchResult found = max_keyrate_over_bases(rho, quick_cfg());
    CHECK(found.rate <= entanglement_of_formation(rho) + 1e-6);
  }
}

TEST_CASE("separable states yield no key in any basis") {
  std::mt19937_64 rng(179);
  for (int k = 0; k < 25; ++k) {
    TwoQubitState sep = random_product_mixture(rng, 1 + static_cast<int>(rng() % 4));
    BasisSearchResult found = max_keyrate_over_bases(sep, quick_cfg());
    CHECK(found.rate <= 1e-6);
  }
}

TEST_CASE("per-state rate is convex at fixed basis") {
  std::mt19937_64 rng(181);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    TwoQubitState a = random_state(rng);
    TwoQubitState b = random_state(rng);
    double lambda = u(rng);
    Bits mixed = fixed_basis_rate(mix(a, b, lambda));
    Bits split = lambda * fixed_basis_rate(a) + (1.0 - lambda) * fixed_basis_rate(b);
    CHECK(mixed <= split + 1e-9);
  }
}

TEST_CASE("concurrence and EoF reference values") {
  TwoQubitState bell = make_state(projector_onto(bell_ket(0)));
  CHECK(concurrence(bell) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(entanglement_of_formation(bell) == doctest::Approx(1.0).epsilon(1e-9));

  // Classically correlated: half |00><00| + half |11><11|.
  ComplexMatrix cc(4, 4);
  cc(0, 0) = 0.5;
  cc(3, 3) = 0.5;
  CHECK(concurrence(make_state(cc)) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(entanglement_of_formation(make_state(cc)) == doctest::Approx(0.0).epsilon(1e-9));

  CHECK(entanglement_of_formation(werner(0.8)) ==
        doctest::Approx(0.591857407170677).epsilon(1e-9));
}

TEST_CASE("concurrence of Bell-diagonal states has a closed form") {
  std::mt19937_64 rng(191);
  for (int k = 0; k < 100; ++k) {
    BellProbs p = cohkey::testing::random_bell_probs(rng);
    double p_max = std::max(std::max(p.p0, p.p1), std::max(p.p2, p.p3));
    double expected = std::max(0.0, 2.0 * p_max - 1.0);
    CHECK(std::abs(concurrence(bell_diagonal(p)) - expected) <= 1e-9);
  }
}

TEST_CASE("local rotations leave concurrence unchanged") {
  std::mt19937_64 rng(193);
  for (int k = 0; k < 50; ++k) {
    TwoQubitState rho = random_state(rng);
    TwoQubitState rotated = local_rotate(rho, random_unitary2(rng), random_unitary2(rng));
    CHECK(std::abs(concurrence(rho) - concurrence(rotated)) <= 1e-8);
  }
}

TEST_CASE("search configuration is validated") {
  BasisSearchConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), OutOfRange);
  BasisSearchConfig bad_tol;
  bad_tol.tolerance = 0.0;
  CHECK_THROWS_AS(bad_tol.validate(), OutOfRange);
}

TEST_CASE("search is deterministic for a fixed seed and parallel-invariant") {
  std::mt19937_64 rng(197);
  TwoQubitState rho = random_state(rng);
  BasisSearchConfig cfg = quick_cfg();
  BasisSearchResult a = max_keyrate_over_bases(rho, cfg);
  BasisSearchResult b = max_keyrate_over_bases(rho, cfg);
  CHECK(a.rate == b.rate);
  CHECK(a.u_alice.max_abs_diff(b.u_alice) == 0.0);

  BasisSearchConfig wide = cfg;
  wide.jobs = 4;
  BasisSearchResult c = max_keyrate_over_bases(rho, wide);
  CHECK(a.rate == c.rate);
}
