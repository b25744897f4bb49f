#include "opnum/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "opnum/errors.hpp"

namespace opnum {

namespace {

constexpr double kPi = std::numbers::pi;

DiskPoint arc_point(int q, bool from_start, double offset) {
  switch (q * 2 + (from_start ? 0 : 1)) {
    case 0: return DiskPoint::on_circle(0.0, offset);
    case 1: return DiskPoint::on_circle(0.5 * kPi, -offset);
    case 2: return DiskPoint::on_circle(0.5 * kPi, offset);
    case 3: return DiskPoint::on_circle(kPi, -offset);
    case 4: return DiskPoint::on_circle(kPi, offset);
    case 5: return DiskPoint::on_circle(1.5 * kPi, -offset);
    case 6: return DiskPoint::on_circle(1.5 * kPi, offset);
    default: return DiskPoint::on_circle(0.0, -offset);
  }
}

}  // namespace

BoundaryGrid graded_grid(int nodes, int grading) {
  if (nodes < 4 || nodes % 4 != 0) throw DomainError("graded_grid: node count must be a positive multiple of 4");
  if (grading < 1) throw DomainError("graded_grid: grading must be >= 1");
  const int n = nodes / 4;
  const double k = grading;
  BoundaryGrid g;
  g.grading = grading;
  g.z.reserve(nodes);
  g.w.reserve(nodes);
  g.angle.reserve(nodes);
  for (int q = 0; q < 4; ++q) {
    const double a0 = 0.5 * kPi * q;
    for (int i = 0; i < n; ++i) {
      double u = (i + 0.5) / n;
      double uk = std::pow(u, k);
      double vk = std::pow(1.0 - u, k);
      double s = uk + vk;
      double G = uk / s;
      double H = vk / s;
      double dG = k * std::pow(u, k - 1.0) * std::pow(1.0 - u, k - 1.0) / (s * s);
      bool from_start = G <= 0.5;
      double offset = 0.5 * kPi * (from_start ? G : H);
      g.z.push_back(arc_point(q, from_start, offset));
      g.w.push_back(dG / (4.0 * n));
      g.angle.push_back(from_start ? a0 + offset : a0 + 0.5 * kPi - offset);
    }
  }
  return g;
}

BoundaryGrid uniform_grid(int nodes, double shift) {
  if (nodes < 1) throw DomainError("uniform_grid: node count must be positive");
  BoundaryGrid g;
  g.z.reserve(nodes);
  for (int i = 0; i < nodes; ++i) {
    double t = 2.0 * kPi * (i + shift) / nodes;
    g.z.push_back(DiskPoint::on_circle(t));
    g.w.push_back(1.0 / nodes);
    g.angle.push_back(t);
  }
  return g;
}

double integrate(const BoundaryGrid& grid, const std::function<double(const DiskPoint&)>& f) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < grid.size(); ++i) acc += static_cast<long double>(grid.w[i]) * f(grid.z[i]);
  return static_cast<double>(acc);
}

QuadratureReport boundary_integral(const std::function<double(const DiskPoint&)>& f,
                                   const QuadratureOptions& opt) {
  QuadratureReport rep;
  double prev = std::nan("");
  for (int m = opt.initial_nodes; m <= opt.max_nodes; m *= 2) {
    double v = integrate(graded_grid(m, opt.grading), f);
    rep.history.emplace_back(m, v);
    rep.nodes = m;
    rep.value = v;
    if (!std::isfinite(v) || v > opt.cap) {
      rep.converged = false;
      rep.last_rel_change = INFINITY;
      return rep;
    }
    if (!std::isnan(prev)) {
      rep.last_rel_change = std::abs(v - prev) / std::max(std::abs(v), 1e-300);
      if (rep.last_rel_change < opt.rel_tol) {
        rep.converged = true;
        return rep;
      }
    }
    prev = v;
  }
  return rep;
}

}  // namespace opnum
