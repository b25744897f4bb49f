#pragma once

#include <complex>

namespace opnum {

using cplx = std::complex<double>;

// A point of the closed disk carried together with 1 - v, 1 + v and
// 1 - |v|^2, each kept to full relative precision. Symbols with boundary
// contact are evaluated on this representation so that kernels and
// deficits near the contact points do not cancel.
struct DiskPoint {
  cplx v{0.0, 0.0};
  cplx om{1.0, 0.0};  // 1 - v
  cplx op{1.0, 0.0};  // 1 + v
  double d = 1.0;     // 1 - |v|^2

  static DiskPoint from(cplx z);
  // e^{it} given as an angle; t near 0 or pi keeps the offsets exact.
  static DiskPoint on_circle(double t);
  // Point whose angle is `base` plus a small signed offset `s`.
  static DiskPoint on_circle(double base, double s);
};

// 1 - conj(a) x accurate when a and x are both near 1 or both near -1.
cplx one_minus_conj_product(const DiskPoint& a, const DiskPoint& x);

// x - a, using the stored offsets when both sit near the same unit point.
cplx difference(const DiskPoint& x, const DiskPoint& a);

// Product x*y with deficit 1-|xy|^2 = d_x + |x|^2 d_y.
DiskPoint multiply(const DiskPoint& x, const DiskPoint& y);

}  // namespace opnum
