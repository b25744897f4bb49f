#pragma once

#include <vector>

#include "opnum/symbols.hpp"

namespace opnum {

double pseudo_hyperbolic(cplx a, cplx b);

// L / sqrt(L^2 + 1)
double kappa_bound(double L);

struct BlaschkeLevel {
  int level = 0;
  int p = 0;                 // largest index with eps_p >= sigma^{l-1} eps_1
  int proof_case = 0;        // 1 or 2
  double rho = 0.0;          // 1 - r
  double radius = 0.0;       // r
  double delta_floor = 0.0;  // lower bound for |B| on |z| = r
};

struct BlaschkeRadiiOptions {
  double alpha = 1.5;   // case 1 constant in (1, 2)
  double a = -1.0;      // case 2 constant in (sigma, 1); default (1 + sigma)/2
  double min_rho = 1e-14;
};

// Circles |z| = r_l on which the interpolating product with zeros
// 1 - eps_1 sigma^{j-1} stays above an explicit floor.
std::vector<BlaschkeLevel> blaschke_radii(double sigma, double eps1, int levels,
                                          const BlaschkeRadiiOptions& opt = {});

// Lower bound for prod_{k >= k0} (1 - x sigma^k)/(1 + x sigma^k), with the
// infinite tail bounded below analytically.
double product_floor(double x, double sigma, int k0);

// Max pairwise pseudo-hyperbolic distance among images of M points on the
// circle of radius r and the center.
double pseudo_diameter(const SymbolSpec& spec, double r, int samples);

// Fraction of M equispaced boundary points whose image lies in D(1, h).
double pullback_window_mass(const SymbolSpec& spec, double h, int samples);

// Sampled sup over the disk of |1 - phi| / (1 - |phi|) on a polar grid with
// radii 1 - 2^{-j}, j = 1..radial_levels.
double contact_constant(const SymbolSpec& spec, int radial_levels, int angles);

// Max |phi| over a graded boundary grid and the points 1 and -1.
double boundary_sup(const SymbolSpec& spec, int nodes = 8192);

}  // namespace opnum
