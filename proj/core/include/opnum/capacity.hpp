#pragma once

#include <vector>

namespace opnum {

struct CapacityValue {
  double tau = 0.0;
  int m = 0;
  double gamma = 0.0;  // exp(-(m! / tau)^{1/m})
  std::vector<double> radii;
  bool proxy = false;
};

// Green capacity 1 / log(1/r) of the disk |z| <= r in the unit disk.
double green_capacity_disk(double r);

// tau_m = prod 1 / log(1/r_k) for the polydisk with the given radii.
CapacityValue tau_polydisk(const std::vector<double>& radii);

// exp(-(m! / tau)^{1/m})
double gamma_from_tau(double tau, int m);

// log(1 / (1 - diam)); grows like the capacity of a set of that
// pseudo-hyperbolic diameter, up to an unknown constant.
double capacity_growth_proxy(double diam);

}  // namespace opnum
