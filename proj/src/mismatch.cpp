#include "cohkey/mismatch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cohkey/errors.hpp"
#include "cohkey/finegrained.hpp"

namespace cohkey {

namespace {

void check_rate_half(const char* name, double e) {
  if (e < -1e-12 || e > 0.5 + 1e-12)
    throw OutOfRange(std::string(name) + " = " + std::to_string(e) + " outside [0, 1/2]");
}

void check_ratio(double x) {
  if (x <= 0.0 || x >= 1.0)
    throw OutOfRange("mismatch ratio x = " + std::to_string(x) + " outside (0, 1)");
}

}  // namespace

void DetectorModel::validate() const {
  for (const auto& [name, eta] : {std::pair{"eta0", eta0}, std::pair{"eta1", eta1}}) {
    if (!(eta > 0.0) || eta > 1.0 + 1e-12)
      throw OutOfRange("DetectorModel: " + std::string(name) + " = " + std::to_string(eta) +
                       " outside (0, 1]");
  }
}

void ObservedDiag::validate() const {
  double sum = 0.0;
  for (double v : m_hat) {
    if (v < -1e-12)
      throw InvalidDistribution("ObservedDiag: negative frequency " + std::to_string(v));
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidDistribution("ObservedDiag: frequencies sum to " + std::to_string(sum));
}

ComplexMatrix filter_op(BasisLabel basis, const DetectorModel& det) {
  det.validate();
  double r0 = std::sqrt(det.eta0);
  double r1 = std::sqrt(det.eta1);
  if (basis == BasisLabel::Z) return ComplexMatrix(2, 2, {r0, 0.0, 0.0, r1});
  if (basis == BasisLabel::X)
    return ComplexMatrix(2, 2,
                         {(r0 + r1) / 2.0, (r0 - r1) / 2.0, (r0 - r1) / 2.0, (r0 + r1) / 2.0});
  throw OutOfRange("filter_op: only Z and X filters are defined");
}

TwoQubitState filtered_state(const TwoQubitState& rho, BasisLabel basis,
                             const DetectorModel& det) {
  ComplexMatrix f = kron(ComplexMatrix::identity(2), filter_op(basis, det));
  ComplexMatrix sigma = f * rho.matrix() * f;
  double norm = sigma.trace().real();
  if (norm <= 1e-12)
    throw VanishingNorm("filtered_state: acceptance probability " + std::to_string(norm));
  return make_state((1.0 / norm) * sigma);
}

ObservedDiag observed_diag(const TwoQubitState& rho, BasisLabel basis, const DetectorModel& det) {
  ObservedDiag obs;
  obs.basis = basis;
  obs.m_hat = full_dephase(filtered_state(rho, basis, det), basis);
  return obs;
}

double gamma_from_observed(const ObservedDiag& obs, const DetectorModel& det) {
  obs.validate();
  det.validate();
  double denom = obs.m_hat[0] / det.eta0 + obs.m_hat[1] / det.eta1 + obs.m_hat[2] / det.eta0 +
                 obs.m_hat[3] / det.eta1;
  return 1.0 / denom;
}

double phase_error_double_prime(const ObservedDiag& obs_x, const DetectorModel& det) {
  if (obs_x.basis != BasisLabel::X)
    throw OutOfRange("phase_error_double_prime: needs X-basis observations, got basis " +
                     std::string(basis_name(obs_x.basis)));
  double gamma_x = gamma_from_observed(obs_x, det);
  return gamma_x * (obs_x.m_hat[1] / det.eta1 + obs_x.m_hat[2] / det.eta0);
}

double corrected_phase_error(double gamma, double e_pp, const DetectorModel& det) {
  det.validate();
  if (!(gamma > 0.0))
    throw OutOfRange("corrected_phase_error: gamma = " + std::to_string(gamma) +
                     " must be positive");
  return 0.5 - std::sqrt(det.eta0 * det.eta1) / gamma * (0.5 - e_pp);
}

KeyRateReport mismatch_keyrate(double x, double e_p, double e_b) {
  check_ratio(x);
  check_rate_half("e_p", e_p);
  check_rate_half("e_b", e_b);
  double f = 0.5 + std::sqrt((0.5 - x) * (0.5 - x) +
                             x * (1.0 - x) * (1.0 - 2.0 * e_p) * (1.0 - 2.0 * e_p));
  KeyRateReport r;
  r.protocol = "mismatch";
  r.coherence_term = binary_entropy(x) - binary_entropy(std::min(f, 1.0));
  r.reconciliation_term = binary_entropy(e_b);
  r.rate = r.coherence_term - r.reconciliation_term;
  r.secure = r.rate > 0.0;
  return r;
}

Bits discard_keyrate_k1(double x, double e_p, double e_b) {
  check_ratio(x);
  check_rate_half("e_p", e_p);
  check_rate_half("e_b", e_b);
  return 2.0 * std::min(x, 1.0 - x) * (1.0 - binary_entropy(e_p) - binary_entropy(e_b));
}

Bits koashi_keyrate_k2(double x, double e_p, double e_b) {
  check_ratio(x);
  check_rate_half("e_p", e_p);
  check_rate_half("e_b", e_b);
  return 2.0 * std::min(x, 1.0 - x) * (1.0 - binary_entropy(e_p)) - binary_entropy(e_b);
}

KeyRateReport mismatch_pipeline(const TwoQubitState& rho, const DetectorModel& det) {
  ObservedDiag obs_z = observed_diag(rho, BasisLabel::Z, det);
  ObservedDiag obs_x = observed_diag(rho, BasisLabel::X, det);
  double gamma = gamma_from_observed(obs_z, det);
  double e_pp = phase_error_double_prime(obs_x, det);
  double e_p_prime = corrected_phase_error(gamma, e_pp, det);
  e_p_prime = std::clamp(e_p_prime, 0.0, 1.0);
  FineGrainedStats stats;
  stats.m00 = obs_z.m_hat[0];
  stats.m11 = obs_z.m_hat[1];
  stats.m22 = obs_z.m_hat[2];
  stats.m33 = obs_z.m_hat[3];
  stats.e_p = e_p_prime;
  KeyRateReport r = bb84_opt_keyrate(stats);
  r.protocol = "mismatch-pipeline";
  return r;
}

}  // namespace cohkey
