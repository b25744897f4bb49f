#include "opnum/capacity.hpp"

#include <cmath>

#include "opnum/errors.hpp"

namespace opnum {

double green_capacity_disk(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("green_capacity_disk: r must lie in (0,1)");
  return -1.0 / std::log(r);
}

double gamma_from_tau(double tau, int m) {
  if (!(tau > 0.0) || m < 1) throw DomainError("gamma_from_tau: need tau > 0 and m >= 1");
  double log_fact = std::lgamma(m + 1.0);
  return std::exp(-std::exp((log_fact - std::log(tau)) / m));
}

CapacityValue tau_polydisk(const std::vector<double>& radii) {
  if (radii.empty()) throw DomainError("tau_polydisk: empty radius list");
  CapacityValue c;
  c.m = static_cast<int>(radii.size());
  c.radii = radii;
  double log_tau = 0.0;
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("tau_polydisk: radii must lie in (0,1)");
    log_tau -= std::log(-std::log(r));
  }
  c.tau = std::exp(log_tau);
  // (m! prod log(1/r_k))^{1/m}, kept in logs
  double log_inner = std::lgamma(c.m + 1.0) - log_tau;
  c.gamma = std::exp(-std::exp(log_inner / c.m));
  return c;
}

double capacity_growth_proxy(double diam) {
  if (!(diam >= 0.0 && diam < 1.0)) throw DomainError("capacity_growth_proxy: diameter must lie in [0,1)");
  return -std::log1p(-diam);
}

}  // namespace opnum
