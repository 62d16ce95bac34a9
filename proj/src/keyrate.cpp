#include "cohkey/keyrate.hpp"

#include <array>
#include <cmath>
#include <string>

#include "cohkey/errors.hpp"

namespace cohkey {

namespace {

double projector_weight(const ComplexMatrix& proj, const ComplexMatrix& rho) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t += proj(i, j) * rho(j, i);
  return t.real();
}

void check_error_rate(const char* name, double e) {
  if (e < -1e-12 || e > 0.5 + 1e-12)
    throw OutOfRange(std::string(name) + " = " + std::to_string(e) + " outside [0, 1/2]");
}

KeyRateReport make_report(std::string protocol, Bits coherence, Bits reconciliation,
                          std::optional<TwoQubitState> witness) {
  KeyRateReport r;
  r.protocol = std::move(protocol);
  r.coherence_term = coherence;
  r.reconciliation_term = reconciliation;
  r.rate = coherence - reconciliation;
  r.secure = r.rate > 0.0;
  r.witness = std::move(witness);
  return r;
}

}  // namespace

ErrorRates error_rates(const TwoQubitState& rho) {
  ErrorRates e;
  e.e_x = projector_weight(parity_projectors(BasisLabel::X).minus, rho.matrix());
  e.e_y = projector_weight(parity_projectors(BasisLabel::Y).minus, rho.matrix());
  e.e_z = projector_weight(parity_projectors(BasisLabel::Z).minus, rho.matrix());
  return e;
}

KeyRateReport keyrate_of_state(const TwoQubitState& rho, Bits iec) {
  Bits coh = coherence_z(partial_dephase(rho).matrix());
  return make_report("state", coh, iec, std::nullopt);
}

KeyRateReport bb84_keyrate(double e_b, double e_p) {
  check_error_rate("e_b", e_b);
  check_error_rate("e_p", e_p);
  Bits coh = 1.0 - binary_entropy(e_p);
  return make_report("bb84", coh, binary_entropy(e_b), bb84_worstcase_state(e_b, e_p));
}

TwoQubitState bb84_worstcase_state(double e_b, double e_p) {
  check_error_rate("e_b", e_b);
  check_error_rate("e_p", e_p);
  BellProbs p;
  p.p0 = (1.0 - e_b) * (1.0 - e_p);
  p.p1 = (1.0 - e_b) * e_p;
  p.p2 = e_b * (1.0 - e_p);
  p.p3 = e_b * e_p;
  return bell_diagonal(p);
}

KeyRateReport sixstate_keyrate(double e_x, double e_y, double e_z) {
  check_error_rate("e_x", e_x);
  check_error_rate("e_y", e_y);
  check_error_rate("e_z", e_z);
  std::array<double, 4> p = {
      (2.0 - e_x - e_y - e_z) / 2.0,
      (e_x + e_y - e_z) / 2.0,
      (e_y + e_z - e_x) / 2.0,
      (e_z + e_x - e_y) / 2.0,
  };
  const char* names[4] = {"p0", "p1", "p2", "p3"};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (p[i] < -1e-12)
      throw InconsistentErrorRates("sixstate_keyrate: " + std::string(names[i]) + " = " +
                                   std::to_string(p[i]) + " is negative; error rates violate "
                                   "the triangle constraints");
    if (p[i] < 0.0) p[i] = 0.0;
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  Bits h4 = shannon_entropy(p);
  Bits coh = 1.0 + binary_entropy(e_z) - h4;
  BellProbs bp{p[0], p[1], p[2], p[3]};
  return make_report("six", coh, binary_entropy(e_z), bell_diagonal(bp));
}

}  // namespace cohkey
