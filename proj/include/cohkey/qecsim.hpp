#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cohkey/coherence.hpp"
#include "cohkey/qstate.hpp"

namespace cohkey {

// Binary parity-check matrix used to hash bit strings into syndromes.
struct HashingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> bits;  // row-major, 0/1

  // One row per line, characters 0 and 1 only.
  static HashingMatrix parse(const std::string& text);
  // The (n-1) x n matrix pairing adjacent positions; for n = 1, the 1x1 [1].
  static HashingMatrix adjacent_pairs(std::size_t n);

  int at(std::size_t r, std::size_t c) const;
  // Syndrome of an n-bit error pattern; both pattern and syndrome pack bit 0
  // of the string into the most significant position.
  unsigned syndrome_of(unsigned error) const;
  void validate() const;  // rows <= cols, no zero rows
};

// Minimum-weight error pattern per syndrome, ties broken by numeric order of
// the MSB-first packing (= lexicographic order of the bit strings).
std::vector<unsigned> coset_leaders(const HashingMatrix& h);

// Joint distribution of Alice/Bob key strings after correction; index
// (alice << n) | bob, strings packed MSB-first.
struct KeyDistribution {
  std::size_t n = 0;
  std::vector<double> p;

  double sum() const;
  double mismatch_probability() const;  // P(alice string != bob string)
  double total_variation(const KeyDistribution& other) const;
};

// Measure first, then reconcile classically: enumerate Z (x) Z outcomes of
// rho^(x)n, hash the XOR of the strings, flip Bob's bits per the coset
// leader of the syndrome.
KeyDistribution classical_ec_run(const TwoQubitState& rho, std::size_t n, const HashingMatrix& h);

// Correct first, then measure: simulate the coherent protocol on
// rho^(x)n (x) (EPR ancillas), with transversal CNOTs into the ancillas per
// the hashing matrix, ancilla Z measurement, Bob-side X corrections, and a
// final Z measurement of the data pairs.
KeyDistribution virtual_qec_run(const TwoQubitState& rho, std::size_t n, const HashingMatrix& h);

// H(Z_A | Z_B) of the single-pair outcome distribution: the asymptotic
// secret-bit cost of reconciliation per pair.
Bits ec_cost(const TwoQubitState& rho);

}  // namespace cohkey
