#include "opnum/disk_point.hpp"

#include <cmath>
#include <numbers>

namespace opnum {

DiskPoint DiskPoint::from(cplx z) {
  DiskPoint p;
  p.v = z;
  p.om = 1.0 - z;
  p.op = 1.0 + z;
  p.d = 1.0 - std::norm(z);
  return p;
}

DiskPoint DiskPoint::on_circle(double t) {
  const double pi = std::numbers::pi;
  double r = std::remainder(t, 2.0 * pi);
  if (std::abs(r) <= 0.5 * pi) return on_circle(0.0, r);
  double s = r > 0 ? r - pi : r + pi;
  return on_circle(pi, s);
}

DiskPoint DiskPoint::on_circle(double base, double s) {
  DiskPoint p;
  const double pi = std::numbers::pi;
  cplx rot = std::polar(1.0, base);
  p.v = rot * std::polar(1.0, s);
  p.d = 0.0;
  // 1 - e^{is} = -2i sin(s/2) e^{is/2}
  cplx one_minus_es = cplx(0.0, -2.0 * std::sin(0.5 * s)) * std::polar(1.0, 0.5 * s);
  if (base == 0.0) {
    p.om = one_minus_es;
    p.op = 1.0 + p.v;
  } else if (base == pi) {
    p.op = one_minus_es;
    p.om = 1.0 - p.v;
  } else {
    p.om = 1.0 - p.v;
    p.op = 1.0 + p.v;
  }
  return p;
}

cplx one_minus_conj_product(const DiskPoint& a, const DiskPoint& x) {
  if (std::abs(a.om) < 0.5 && std::abs(x.om) < 0.5) {
    cplx ca = std::conj(a.om);
    return x.om + ca - ca * x.om;
  }
  if (std::abs(a.op) < 0.5 && std::abs(x.op) < 0.5) {
    cplx ca = std::conj(a.op);
    return x.op + ca - ca * x.op;
  }
  return 1.0 - std::conj(a.v) * x.v;
}

cplx difference(const DiskPoint& x, const DiskPoint& a) {
  if (std::abs(a.om) < 0.5 && std::abs(x.om) < 0.5) return a.om - x.om;
  if (std::abs(a.op) < 0.5 && std::abs(x.op) < 0.5) return x.op - a.op;
  return x.v - a.v;
}

DiskPoint multiply(const DiskPoint& x, const DiskPoint& y) {
  DiskPoint p;
  p.v = x.v * y.v;
  p.om = x.om + x.v * y.om;
  p.op = 1.0 + p.v;
  p.d = x.d + std::norm(x.v) * y.d;
  return p;
}

}  // namespace opnum
