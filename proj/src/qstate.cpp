#include "cohkey/qstate.hpp"

#include <cmath>
#include <string>

namespace cohkey {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-9;

const Complex kI(0.0, 1.0);

}  // namespace

const char* basis_name(BasisLabel b) {
  switch (b) {
    case BasisLabel::Z: return "Z";
    case BasisLabel::X: return "X";
    case BasisLabel::Y: return "Y";
  }
  return "?";
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0, 1, 1, 0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, 2, {0, -kI, kI, 0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1, 0, 0, -1}); }

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix(2, 2, {s, s, s, -s});
}

ComplexMatrix basis_ket(BasisLabel b, int index) {
  if (index != 0 && index != 1)
    throw BadIndex("basis_ket index must be 0 or 1, got " + std::to_string(index));
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix v(2, 1);
  switch (b) {
    case BasisLabel::Z:
      v(index, 0) = 1.0;
      break;
    case BasisLabel::X:
      v(0, 0) = s;
      v(1, 0) = index == 0 ? s : -s;
      break;
    case BasisLabel::Y:
      v(0, 0) = s;
      v(1, 0) = index == 0 ? s * kI : -s * kI;
      break;
  }
  return v;
}

ComplexMatrix qubit_unitary(double alpha, double beta, double gamma) {
  const double cb = std::cos(beta / 2.0), sb = std::sin(beta / 2.0);
  const Complex ea = std::polar(1.0, -0.5 * (alpha + gamma));
  const Complex eb = std::polar(1.0, -0.5 * (alpha - gamma));
  ComplexMatrix u(2, 2);
  u(0, 0) = ea * cb;
  u(0, 1) = -eb * sb;
  u(1, 0) = std::conj(eb) * sb;
  u(1, 1) = std::conj(ea) * cb;
  return u;
}

std::array<double, 3> euler_angles_of(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2)
    throw DimensionMismatch("euler_angles_of expects a 2x2 matrix");
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  const double beta = 2.0 * std::atan2(s, c);
  double sum = 0.0, diff = 0.0;  // (alpha+gamma)/2, (alpha-gamma)/2
  if (c > 1e-12) sum = -std::arg(u(0, 0));
  if (s > 1e-12) diff = std::arg(u(1, 0));
  return {sum + diff, beta, sum - diff};
}

std::array<double, 4> TwoQubitState::diagonal() const {
  std::array<double, 4> d{};
  for (int i = 0; i < 4; ++i) d[i] = std::max(0.0, m_(i, i).real());
  return d;
}

TwoQubitState make_state(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw DimensionMismatch("two-qubit state must be 4x4, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  if (worst > kHermitianTol)
    throw NotHermitian("matrix is not Hermitian: max asymmetry " +
                       std::to_string(worst));
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw TraceNotOne("trace is " + std::to_string(tr));
  const std::vector<double> eigs = hermitian_eigenvalues(m);
  if (eigs.back() < -kPsdTol)
    throw NotPositive("smallest eigenvalue " + std::to_string(eigs.back()) +
                      " below -1e-9");
  return TwoQubitState(m);
}

TwoQubitState pure_state(const ComplexMatrix& ket) {
  if (ket.rows() != 4 || ket.cols() != 1)
    throw DimensionMismatch("pure_state expects a 4x1 ket");
  double norm2 = 0.0;
  for (int i = 0; i < 4; ++i) norm2 += std::norm(ket(i, 0));
  if (norm2 < 1e-12) throw VanishingNorm("pure_state ket has zero norm");
  return make_state((1.0 / norm2) * projector_onto(ket));
}

ParityProjectors parity_projectors(BasisLabel basis) {
  const ComplexMatrix b0 = basis_ket(basis, 0), b1 = basis_ket(basis, 1);
  const ComplexMatrix k00 = kron(b0, b0), k01 = kron(b0, b1);
  const ComplexMatrix k10 = kron(b1, b0), k11 = kron(b1, b1);
  ParityProjectors out{basis, ComplexMatrix(4, 4), ComplexMatrix(4, 4)};
  if (basis == BasisLabel::Y) {
    out.plus = projector_onto(k01) + projector_onto(k10);
    out.minus = projector_onto(k00) + projector_onto(k11);
  } else {
    out.plus = projector_onto(k00) + projector_onto(k11);
    out.minus = projector_onto(k01) + projector_onto(k10);
  }
  return out;
}

ComplexMatrix partial_dephase_raw(const ComplexMatrix& rho) {
  ComplexMatrix out(4, 4);
  for (int i = 0; i < 4; ++i) out(i, i) = rho(i, i);
  out(0, 3) = rho(0, 3);
  out(3, 0) = rho(3, 0);
  out(1, 2) = rho(1, 2);
  out(2, 1) = rho(2, 1);
  return out;
}

TwoQubitState partial_dephase(const TwoQubitState& rho) {
  return make_state(partial_dephase_raw(rho.matrix()));
}

std::array<double, 4> full_dephase_raw(const ComplexMatrix& rho, BasisLabel basis) {
  const ComplexMatrix b0 = basis_ket(basis, 0), b1 = basis_ket(basis, 1);
  const ComplexMatrix kets[4] = {kron(b0, b0), kron(b0, b1), kron(b1, b0),
                                 kron(b1, b1)};
  std::array<double, 4> p{};
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    Complex v = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        v += std::conj(kets[k](i, 0)) * rho(i, j) * kets[k](j, 0);
    p[k] = std::max(0.0, v.real());
    sum += p[k];
  }
  if (sum > 0.0)
    for (double& x : p) x /= sum;
  return p;
}

std::array<double, 4> full_dephase(const TwoQubitState& rho, BasisLabel basis) {
  return full_dephase_raw(rho.matrix(), basis);
}

ComplexMatrix partial_trace_A(const TwoQubitState& rho) {
  ComplexMatrix out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = rho(i, j) + rho(2 + i, 2 + j);
  return out;
}

ComplexMatrix partial_trace_B(const TwoQubitState& rho) {
  ComplexMatrix out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  return out;
}

TwoQubitState local_rotate(const TwoQubitState& rho, const ComplexMatrix& u_alice,
                           const ComplexMatrix& u_bob) {
  for (const ComplexMatrix* u : {&u_alice, &u_bob}) {
    if (u->rows() != 2 || u->cols() != 2)
      throw DimensionMismatch("local rotation factors must be 2x2");
    const double dev =
        (u->adjoint() * (*u)).max_abs_diff(ComplexMatrix::identity(2));
    if (dev > 1e-10)
      throw NotUnitary("rotation factor deviates from unitarity by " +
                       std::to_string(dev));
  }
  const ComplexMatrix u = kron(u_alice, u_bob);
  return make_state(u * rho.matrix() * u.adjoint());
}

ComplexMatrix bell_ket(int index) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix v(4, 1);
  switch (index) {
    case 0: v(0, 0) = s; v(3, 0) = s; break;
    case 1: v(0, 0) = s; v(3, 0) = -s; break;
    case 2: v(1, 0) = s; v(2, 0) = s; break;
    case 3: v(1, 0) = s; v(2, 0) = -s; break;
    default:
      throw BadIndex("bell_ket index must be 0..3, got " + std::to_string(index));
  }
  return v;
}

void BellProbs::validate() const {
  const double p[4] = {p0, p1, p2, p3};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (p[i] < -1e-12)
      throw InvalidDistribution("Bell weight p" + std::to_string(i) + " = " +
                                std::to_string(p[i]) + " is negative");
    sum += std::max(0.0, p[i]);
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidDistribution("Bell weights sum to " + std::to_string(sum));
}

TwoQubitState bell_diagonal(const BellProbs& probs) {
  probs.validate();
  const double raw[4] = {probs.p0, probs.p1, probs.p2, probs.p3};
  double sum = 0.0;
  for (double p : raw) sum += std::max(0.0, p);
  ComplexMatrix rho(4, 4);
  for (int k = 0; k < 4; ++k) {
    const double w = std::max(0.0, raw[k]) / sum;
    if (w == 0.0) continue;
    rho += w * projector_onto(bell_ket(k));
  }
  return make_state(rho);
}

}  // namespace cohkey
