#include "opnum/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "opnum/errors.hpp"
#include "opnum/quadrature.hpp"

namespace opnum {

double pseudo_hyperbolic(cplx a, cplx b) {
  if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0)) throw DomainError("pseudo_hyperbolic: points must lie in the open disk");
  DiskPoint pa = DiskPoint::from(a);
  DiskPoint pb = DiskPoint::from(b);
  cplx den = one_minus_conj_product(pa, pb);
  if (den == cplx(0.0, 0.0)) return 0.0;
  return std::min(1.0, std::abs(difference(pa, pb)) / std::abs(den));
}

double kappa_bound(double L) {
  if (!(L > 0.0)) throw DomainError("kappa_bound: L must be positive");
  return L / std::sqrt(L * L + 1.0);
}

double product_floor(double x, double sigma, int k0) {
  long double logp = 0.0L;
  double t = x * std::pow(sigma, k0);
  if (!(t < 1.0)) throw DomainError("product_floor: leading factor is not positive");
  int k = k0;
  while (t > 1e-18) {
    logp += std::log1p(-t) - std::log1p(t);
    t *= sigma;
    ++k;
  }
  // -2 artanh(y) >= -2y/(1-y^2) summed over the remaining geometric tail
  double tail = 2.0 * t / ((1.0 - sigma) * (1.0 - t * t));
  return static_cast<double>(std::exp(logp - tail));
}

std::vector<BlaschkeLevel> blaschke_radii(double sigma, double eps1, int levels, const BlaschkeRadiiOptions& opt) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("blaschke_radii: sigma must lie in (0,1)");
  if (!(eps1 > 0.0 && eps1 < 1.0)) throw DomainError("blaschke_radii: eps1 must lie in (0,1)");
  double alpha = opt.alpha;
  double a = opt.a > 0.0 ? opt.a : 0.5 * (1.0 + sigma);
  if (!(alpha > 1.0 && alpha < 2.0)) throw DomainError("blaschke_radii: alpha must lie in (1,2)");
  if (!(a > sigma && a < 1.0)) throw DomainError("blaschke_radii: a must lie in (sigma,1)");

  // eps_j = eps1 sigma^{j-1} is kept as an exponent to compare exactly.
  auto eps = [&](int j) { return eps1 * std::pow(sigma, j - 1); };
  const double delta1 = product_floor(alpha / 2.0, sigma, 0) * product_floor(1.0 / alpha, sigma, 0);
  const double delta2 = product_floor(a, sigma, 0) * product_floor(1.0 / a, sigma, 1);

  std::vector<BlaschkeLevel> out;
  for (int l = 1; l <= levels; ++l) {
    BlaschkeLevel lv;
    lv.level = l;
    double target = eps(l);
    int p = 1;
    for (int j = 1; j <= l; ++j) {
      if (eps(j) >= target * (1.0 - 1e-12)) p = j;
    }
    lv.p = p;
    if (eps(p) >= 2.0 * target) {
      lv.proof_case = 1;
      lv.rho = alpha * target;
      lv.delta_floor = delta1;
    } else {
      lv.proof_case = 2;
      lv.rho = a * eps(p);
      lv.delta_floor = delta2;
    }
    if (lv.rho < opt.min_rho) throw DomainError("blaschke_radii: rho_l below the floating-point floor");
    lv.radius = 1.0 - lv.rho;
    out.push_back(lv);
  }
  return out;
}

double pseudo_diameter(const SymbolSpec& spec, double r, int samples) {
  if (samples < 2) throw DomainError("pseudo_diameter: need at least two samples");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("pseudo_diameter: radius must lie in [0,1)");
  std::vector<cplx> img;
  img.reserve(samples + 1);
  img.push_back(eval(spec, 0.0));
  for (int k = 0; k < samples; ++k) img.push_back(eval(spec, std::polar(r, 2.0 * std::numbers::pi * k / samples)));
  double best = 0.0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j) best = std::max(best, pseudo_hyperbolic(img[i], img[j]));
  return best;
}

double pullback_window_mass(const SymbolSpec& spec, double h, int samples) {
  if (samples < 1) throw DomainError("pullback_window_mass: need samples");
  BoundaryGrid g = uniform_grid(samples, 0.5);
  long hits = 0;
  for (const DiskPoint& z : g.z) {
    if (std::abs(spec.at(z).om) <= h) ++hits;
  }
  return static_cast<double>(hits) / samples;
}

double contact_constant(const SymbolSpec& spec, int radial_levels, int angles) {
  double best = 0.0;
  for (int j = 1; j <= radial_levels; ++j) {
    double r = 1.0 - std::ldexp(1.0, -j);
    for (int k = 0; k < angles; ++k) {
      double t = 2.0 * std::numbers::pi * (k + 0.5) / angles;
      DiskPoint z = DiskPoint::from(std::polar(r, t));
      z.d = std::ldexp(1.0, -j) * (2.0 - std::ldexp(1.0, -j));
      DiskPoint w = spec.at(z);
      double one_minus_mod = w.d / (1.0 + std::abs(w.v));
      if (one_minus_mod > 0.0) best = std::max(best, std::abs(w.om) / one_minus_mod);
    }
  }
  return best;
}

double boundary_sup(const SymbolSpec& spec, int nodes) {
  BoundaryGrid g = graded_grid(nodes, 8);
  double best = 0.0;
  for (const DiskPoint& z : g.z) best = std::max(best, std::abs(spec.at(z).v));
  // the contact points themselves, where boundary limits are defined
  for (double t : {0.0, std::numbers::pi}) {
    try {
      double v = std::abs(spec.at(DiskPoint::on_circle(t)).v);
      if (std::isfinite(v)) best = std::max(best, v);
    } catch (const Error&) {
    }
  }
  return best;
}

}  // namespace opnum
