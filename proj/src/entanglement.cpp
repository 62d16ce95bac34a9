#include "cohkey/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "cohkey/eigen.hpp"
#include "cohkey/errors.hpp"
#include "cohkey/parallel.hpp"

namespace cohkey {

namespace {

using Angles = std::array<double, 6>;

// Rate of the rotated state, on raw matrices to keep the inner search loop
// free of state revalidation.
Bits rotated_rate(const ComplexMatrix& rho, const ComplexMatrix& u_alice,
                  const ComplexMatrix& u_bob) {
  ComplexMatrix u = kron(u_alice, u_bob);
  ComplexMatrix sigma = u * rho * u.adjoint();
  double e_b = sigma(1, 1).real() + sigma(2, 2).real();
  e_b = std::clamp(e_b, 0.0, 1.0);
  return coherence_z(partial_dephase_raw(sigma)) - binary_entropy(e_b);
}

Bits angles_rate(const ComplexMatrix& rho, const Angles& a) {
  return rotated_rate(rho, qubit_unitary(a[0], a[1], a[2]), qubit_unitary(a[3], a[4], a[5]));
}

struct SimplexPoint {
  Angles x;
  Bits value;  // negated rate; the search minimizes
};

// Nelder-Mead on the six angles.  Returns the best vertex found.
SimplexPoint nelder_mead(const ComplexMatrix& rho, const Angles& start, std::size_t max_iterations,
                         double tolerance) {
  auto eval = [&](const Angles& a) { return -angles_rate(rho, a); };
  constexpr double kStep = 0.3;
  std::array<SimplexPoint, 7> simplex;
  simplex[0] = {start, eval(start)};
  for (std::size_t d = 0; d < 6; ++d) {
    Angles a = start;
    a[d] += kStep;
    simplex[d + 1] = {a, eval(a)};
  }
  auto by_value = [](const SimplexPoint& p, const SimplexPoint& q) { return p.value < q.value; };
  for (std::size_t it = 0; it < max_iterations; ++it) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex.back().value - simplex.front().value < tolerance) break;

    Angles centroid{};
    for (std::size_t v = 0; v < 6; ++v)
      for (std::size_t d = 0; d < 6; ++d) centroid[d] += simplex[v].x[d] / 6.0;
    const SimplexPoint& worst = simplex.back();

    auto blend = [&](double t) {
      Angles a;
      for (std::size_t d = 0; d < 6; ++d) a[d] = centroid[d] + t * (centroid[d] - worst.x[d]);
      return a;
    };

    Angles reflected = blend(1.0);
    Bits fr = eval(reflected);
    if (fr < simplex[0].value) {
      Angles expanded = blend(2.0);
      Bits fe = eval(expanded);
      simplex.back() = fe < fr ? SimplexPoint{expanded, fe} : SimplexPoint{reflected, fr};
      continue;
    }
    if (fr < simplex[5].value) {
      simplex.back() = {reflected, fr};
      continue;
    }
    Angles contracted = blend(fr < worst.value ? 0.5 : -0.5);
    Bits fc = eval(contracted);
    if (fc < std::min(fr, worst.value)) {
      simplex.back() = {contracted, fc};
      continue;
    }
    for (std::size_t v = 1; v < 7; ++v) {
      for (std::size_t d = 0; d < 6; ++d)
        simplex[v].x[d] = simplex[0].x[d] + 0.5 * (simplex[v].x[d] - simplex[0].x[d]);
      simplex[v].value = eval(simplex[v].x);
    }
  }
  return *std::min_element(simplex.begin(), simplex.end(), by_value);
}

// Unitary whose rows are the conjugated eigenvectors of m: it rotates m's
// eigenbasis onto the computational one.
ComplexMatrix diagonalizing_unitary(const ComplexMatrix& m) {
  Eigensystem es = hermitian_eigensystem(m);
  ComplexMatrix u(2, 2);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i) u(k, i) = std::conj(es.vectors(i, k));
  return u;
}

}  // namespace

void BasisSearchConfig::validate() const {
  if (restarts < 1) throw OutOfRange("BasisSearchConfig: restarts must be >= 1");
  if (!(tolerance > 0.0)) throw OutOfRange("BasisSearchConfig: tolerance must be positive");
}

Bits hashing_bound(const TwoQubitState& rho) {
  TwoQubitState phi = partial_dephase(rho);
  return von_neumann_entropy(partial_trace_A(phi)) - von_neumann_entropy(phi);
}

ComplexMatrix dephase_alice(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DimensionMismatch("dephase_alice: need 4x4");
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i / 2 == j / 2) out(i, j) = rho(i, j);
  return out;
}

Bits devetak_winter_privacy(const TwoQubitState& rho) {
  return quantum_relative_entropy(rho.matrix(), dephase_alice(rho.matrix()));
}

BasisSearchResult max_keyrate_over_bases(const TwoQubitState& rho, const BasisSearchConfig& cfg) {
  cfg.validate();
  const ComplexMatrix& m = rho.matrix();

  ComplexMatrix schmidt_a = diagonalizing_unitary(partial_trace_B(rho));
  ComplexMatrix schmidt_b = diagonalizing_unitary(partial_trace_A(rho));

  std::vector<Angles> starts;
  starts.push_back({0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  {
    std::array<double, 3> ea = euler_angles_of(schmidt_a);
    std::array<double, 3> eb = euler_angles_of(schmidt_b);
    starts.push_back({ea[0], ea[1], ea[2], eb[0], eb[1], eb[2]});
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> full(0.0, 2.0 * 3.14159265358979323846);
  std::uniform_real_distribution<double> half(0.0, 3.14159265358979323846);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    Angles a;
    for (std::size_t d = 0; d < 6; ++d) a[d] = d % 3 == 1 ? half(rng) : full(rng);
    starts.push_back(a);
  }

  struct Candidate {
    Bits rate = 0.0;
    ComplexMatrix u_alice;
    ComplexMatrix u_bob;
  };
  std::vector<Candidate> candidates(starts.size() + 1);
  // The Schmidt unitaries evaluated as-is, in case the angle round trip
  // through the simplex polish loses them.
  candidates[0] = {rotated_rate(m, schmidt_a, schmidt_b), schmidt_a, schmidt_b};

  parallel_for_indexed(starts.size(), cfg.jobs, [&](std::size_t i) {
    SimplexPoint best = nelder_mead(m, starts[i], cfg.max_iterations, cfg.tolerance);
    candidates[i + 1] = {-best.value, qubit_unitary(best.x[0], best.x[1], best.x[2]),
                         qubit_unitary(best.x[3], best.x[4], best.x[5])};
  });

  std::size_t winner = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i].rate > candidates[winner].rate) winner = i;

  BasisSearchResult result;
  result.rate = candidates[winner].rate;
  result.u_alice = std::move(candidates[winner].u_alice);
  result.u_bob = std::move(candidates[winner].u_bob);
  return result;
}

double concurrence(const TwoQubitState& rho) {
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix yy(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  ComplexMatrix flipped = yy * m.conjugate() * yy;

  Eigensystem es = hermitian_eigensystem(m);
  ComplexMatrix root(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    double lam = std::sqrt(std::max(es.values[k], 0.0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        root(i, j) += lam * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  ComplexMatrix r = root * flipped * root;
  r = 0.5 * (r + r.adjoint());  // scrub rounding asymmetry before the eigensolver
  std::vector<double> ev = hermitian_eigenvalues(r);
  std::array<double, 4> lams;
  for (std::size_t k = 0; k < 4; ++k) lams[k] = std::sqrt(std::max(ev[k], 0.0));
  double c = lams[0] - lams[1] - lams[2] - lams[3];
  return std::clamp(c, 0.0, 1.0);
}

Bits entanglement_of_formation(const TwoQubitState& rho) {
  double c = concurrence(rho);
  return binary_entropy(0.5 + 0.5 * std::sqrt(std::max(1.0 - c * c, 0.0)));
}

}  // namespace cohkey
