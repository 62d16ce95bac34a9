#include "cohkey/qecsim.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "cohkey/errors.hpp"

namespace cohkey {

namespace {

void check_dims(const TwoQubitState&, std::size_t n, const HashingMatrix& h) {
  h.validate();
  if (h.cols != n)
    throw DimensionMismatch("hashing matrix has " + std::to_string(h.cols) +
                            " columns but the run uses " + std::to_string(n) + " pairs");
}

// CNOT as an index permutation: flip the target bit when the control bit is
// set.  Bits count from the most significant end of a Q-bit index.
std::size_t cnot_perm(std::size_t i, std::size_t q_total, std::size_t control,
                      std::size_t target) {
  std::size_t cmask = std::size_t{1} << (q_total - 1 - control);
  std::size_t tmask = std::size_t{1} << (q_total - 1 - target);
  return (i & cmask) ? i ^ tmask : i;
}

}  // namespace

HashingMatrix HashingMatrix::parse(const std::string& text) {
  HashingMatrix h;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<int> row;
    for (char ch : line) {
      if (ch == '0' || ch == '1')
        row.push_back(ch - '0');
      else
        throw ParseError("hashing matrix line " + std::to_string(line_no) +
                         ": unexpected character '" + std::string(1, ch) + "'");
    }
    if (h.rows == 0)
      h.cols = row.size();
    else if (row.size() != h.cols)
      throw ParseError("hashing matrix line " + std::to_string(line_no) + ": expected " +
                       std::to_string(h.cols) + " columns, got " + std::to_string(row.size()));
    h.bits.insert(h.bits.end(), row.begin(), row.end());
    ++h.rows;
  }
  if (h.rows == 0) throw ParseError("hashing matrix: no rows");
  h.validate();
  return h;
}

HashingMatrix HashingMatrix::adjacent_pairs(std::size_t n) {
  if (n == 0) throw OutOfRange("adjacent_pairs: need at least one column");
  HashingMatrix h;
  if (n == 1) {
    h.rows = h.cols = 1;
    h.bits = {1};
    return h;
  }
  h.rows = n - 1;
  h.cols = n;
  h.bits.assign(h.rows * h.cols, 0);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    h.bits[j * n + j] = 1;
    h.bits[j * n + j + 1] = 1;
  }
  return h;
}

int HashingMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows || c >= cols) throw BadIndex("HashingMatrix: index out of range");
  return bits[r * cols + c];
}

unsigned HashingMatrix::syndrome_of(unsigned error) const {
  unsigned s = 0;
  for (std::size_t j = 0; j < rows; ++j) {
    int bit = 0;
    for (std::size_t k = 0; k < cols; ++k)
      bit ^= bits[j * cols + k] & static_cast<int>((error >> (cols - 1 - k)) & 1u);
    s |= static_cast<unsigned>(bit) << (rows - 1 - j);
  }
  return s;
}

void HashingMatrix::validate() const {
  if (rows == 0 || cols == 0) throw OutOfRange("HashingMatrix: empty");
  if (rows > cols)
    throw OutOfRange("HashingMatrix: " + std::to_string(rows) + " rows exceed " +
                     std::to_string(cols) + " columns");
  if (bits.size() != rows * cols) throw DimensionMismatch("HashingMatrix: bit count mismatch");
  for (std::size_t j = 0; j < rows; ++j) {
    bool nonzero = false;
    for (std::size_t k = 0; k < cols; ++k) nonzero = nonzero || bits[j * cols + k] != 0;
    if (!nonzero) throw OutOfRange("HashingMatrix: row " + std::to_string(j) + " is zero");
  }
}

std::vector<unsigned> coset_leaders(const HashingMatrix& h) {
  if (h.cols > 20) throw TooLarge("coset_leaders: " + std::to_string(h.cols) + " columns");
  std::vector<unsigned> leader(std::size_t{1} << h.rows, 0);
  std::vector<bool> seen(leader.size(), false);
  for (unsigned e = 0; e < (1u << h.cols); ++e) {
    unsigned s = h.syndrome_of(e);
    if (!seen[s] || std::popcount(e) < std::popcount(leader[s])) {
      leader[s] = e;
      seen[s] = true;
    }
  }
  return leader;
}

double KeyDistribution::sum() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

double KeyDistribution::mismatch_probability() const {
  double s = 0.0;
  std::size_t keys = std::size_t{1} << n;
  for (std::size_t a = 0; a < keys; ++a)
    for (std::size_t b = 0; b < keys; ++b)
      if (a != b) s += p[(a << n) | b];
  return s;
}

double KeyDistribution::total_variation(const KeyDistribution& other) const {
  if (n != other.n || p.size() != other.p.size())
    throw DimensionMismatch("total_variation: distributions of different size");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - other.p[i]);
  return s / 2.0;
}

KeyDistribution classical_ec_run(const TwoQubitState& rho, std::size_t n, const HashingMatrix& h) {
  check_dims(rho, n, h);
  if (n > 4) throw TooLarge("classical_ec_run: pair count " + std::to_string(n) + " exceeds 4");
  std::array<double, 4> q = rho.diagonal();
  std::vector<unsigned> leader = coset_leaders(h);

  KeyDistribution out;
  out.n = n;
  out.p.assign(std::size_t{1} << (2 * n), 0.0);
  std::size_t keys = std::size_t{1} << n;
  for (std::size_t za = 0; za < keys; ++za) {
    for (std::size_t zb = 0; zb < keys; ++zb) {
      double prob = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        int a = static_cast<int>((za >> (n - 1 - k)) & 1u);
        int b = static_cast<int>((zb >> (n - 1 - k)) & 1u);
        prob *= q[2 * a + b];
      }
      if (prob == 0.0) continue;
      unsigned s = h.syndrome_of(static_cast<unsigned>(za ^ zb));
      std::size_t corrected = zb ^ leader[s];
      out.p[(za << n) | corrected] += prob;
    }
  }
  return out;
}

KeyDistribution virtual_qec_run(const TwoQubitState& rho, std::size_t n, const HashingMatrix& h) {
  check_dims(rho, n, h);
  std::size_t r = h.rows;
  std::size_t q_total = 2 * n + 2 * r;
  if (q_total > 12)
    throw TooLarge("virtual_qec_run: " + std::to_string(q_total) + " qubits exceed the cap of 12");

  // Qubit order: [A1 B1 ... An Bn a1 b1 ... ar br], first factor most
  // significant.
  ComplexMatrix state = rho.matrix();
  for (std::size_t k = 1; k < n; ++k) state = kron(state, rho.matrix());
  ComplexMatrix epr = projector_onto(bell_ket(0));
  for (std::size_t j = 0; j < r; ++j) state = kron(state, epr);

  const std::size_t dim = std::size_t{1} << q_total;
  auto apply_cnot = [&](std::size_t control, std::size_t target) {
    ComplexMatrix next(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      std::size_t pi = cnot_perm(i, q_total, control, target);
      for (std::size_t j = 0; j < dim; ++j)
        next(i, j) = state(pi, cnot_perm(j, q_total, control, target));
    }
    state = std::move(next);
  };
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (h.at(j, k) == 0) continue;
      apply_cnot(2 * k, 2 * n + 2 * j);          // A_k -> a_j
      apply_cnot(2 * k + 1, 2 * n + 2 * j + 1);  // B_k -> b_j
    }
  }

  std::vector<unsigned> leader = coset_leaders(h);
  KeyDistribution out;
  out.n = n;
  out.p.assign(std::size_t{1} << (2 * n), 0.0);

  const std::size_t anc_count = std::size_t{1} << (2 * r);
  const std::size_t data_count = std::size_t{1} << (2 * n);
  for (std::size_t base = 0; base < anc_count; ++base) {
    // Ancilla Z outcomes: a_j at bit 2j, b_j at bit 2j+1 (MSB-first).
    unsigned syndrome = 0;
    for (std::size_t j = 0; j < r; ++j) {
      unsigned a = (base >> (2 * r - 1 - 2 * j)) & 1u;
      unsigned b = (base >> (2 * r - 1 - (2 * j + 1))) & 1u;
      syndrome |= (a ^ b) << (r - 1 - j);
    }
    // Bob-side X corrections per the coset leader, folded into the readout
    // index.
    std::size_t mask = 0;
    for (std::size_t k = 0; k < n; ++k)
      if ((leader[syndrome] >> (n - 1 - k)) & 1u)
        mask |= std::size_t{1} << (2 * n - 1 - (2 * k + 1));

    for (std::size_t d = 0; d < data_count; ++d) {
      std::size_t global = ((d ^ mask) << (2 * r)) | base;
      double prob = state(global, global).real();
      if (prob <= 0.0) continue;
      std::size_t za = 0;
      std::size_t zb = 0;
      for (std::size_t k = 0; k < n; ++k) {
        za |= ((d >> (2 * n - 1 - 2 * k)) & 1u) << (n - 1 - k);
        zb |= ((d >> (2 * n - 1 - (2 * k + 1))) & 1u) << (n - 1 - k);
      }
      out.p[(za << n) | zb] += prob;
    }
  }
  return out;
}

Bits ec_cost(const TwoQubitState& rho) {
  std::array<double, 4> q = rho.diagonal();
  double sum = q[0] + q[1] + q[2] + q[3];
  for (double& v : q) v /= sum;
  Bits joint = shannon_entropy(q);
  double b0 = q[0] + q[2];  // P(Bob reads 0)
  return joint - binary_entropy(std::clamp(b0, 0.0, 1.0));
}

}  // namespace cohkey
