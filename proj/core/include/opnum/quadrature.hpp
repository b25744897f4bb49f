#pragma once

#include <functional>
#include <vector>

#include "opnum/disk_point.hpp"

namespace opnum {

// Nodes on the unit circle with weights for normalized arc length dm.
struct BoundaryGrid {
  std::vector<DiskPoint> z;
  std::vector<double> w;
  std::vector<double> angle;  // in [0, 2 pi)
  int grading = 0;            // 0 for uniform

  std::size_t size() const { return z.size(); }
};

// Four quarter arcs, each mapped by u -> u^k / (u^k + (1-u)^k) and sampled
// at midpoints, so nodes cluster geometrically toward 1, i, -1, -i. Angles
// near 1 and -1 are stored as exact offsets.
BoundaryGrid graded_grid(int nodes, int grading = 8);

// Equispaced nodes e^{2 pi i (k + shift) / M}, weights 1/M.
BoundaryGrid uniform_grid(int nodes, double shift = 0.0);

struct QuadratureOptions {
  int initial_nodes = 1024;
  int max_nodes = 1 << 20;
  double rel_tol = 1e-8;
  int grading = 16;
  double cap = 1e300;
};

struct QuadratureReport {
  double value = 0.0;
  bool converged = false;
  int nodes = 0;
  double last_rel_change = 0.0;
  std::vector<std::pair<int, double>> history;
};

// Integral of f over dm, doubling the node count until the relative change
// drops below rel_tol or max_nodes is exceeded.
QuadratureReport boundary_integral(const std::function<double(const DiskPoint&)>& f,
                                   const QuadratureOptions& opt = {});

double integrate(const BoundaryGrid& grid, const std::function<double(const DiskPoint&)>& f);

}  // namespace opnum
