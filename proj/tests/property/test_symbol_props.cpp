#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "opnum/geometry.hpp"
#include "opnum/series.hpp"
#include "opnum/symbols.hpp"
#include "support/gen.hpp"

using namespace opnum;
using opnum::testing::Gen;

namespace {

// 10 radii x 10 angles, radii up to 0.99.
std::vector<cplx> disk_grid(double lo_angle = 0.0, double hi_angle = 2.0 * std::numbers::pi) {
  std::vector<cplx> z;
  for (int i = 1; i <= 10; ++i)
    for (int j = 0; j < 10; ++j) z.push_back(std::polar(0.99 * i / 10.0, lo_angle + (hi_angle - lo_angle) * j / 10.0));
  return z;
}

// Right half of the disk, with points pushed toward 1.
std::vector<cplx> right_half_grid(Gen& g) {
  std::vector<cplx> z = disk_grid(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
  for (int k = 0; k < 60; ++k) z.push_back(g.right_half_disk());
  for (int k = 0; k < 40; ++k) {
    cplx p = g.near_one(6.0);
    if (std::abs(p) < 1.0) z.push_back(p);
  }
  return z;
}

SymbolSpec shifted_lens(double th) { return SymbolSpec::compose(SymbolSpec::lens(th), SymbolSpec::halfshift()); }

}  // namespace

TEST(SymbolProps, LensSemigroup) {
  Gen g(11);
  for (int trial = 0; trial < 12; ++trial) {
    double t1 = g.theta(0.1, 1.0), t2 = g.theta(0.1, 1.0);
    SymbolSpec c = SymbolSpec::compose(SymbolSpec::lens(t2), SymbolSpec::lens(t1));
    SymbolSpec l = SymbolSpec::lens(t1 * t2);
    for (cplx z : disk_grid()) EXPECT_LE(std::abs(eval(c, z) - eval(l, z)), 1e-10) << t1 << " " << t2 << " " << z;
  }
}

TEST(SymbolProps, LensLowerEstimate) {
  Gen g(12);
  for (int trial = 0; trial < 10; ++trial) {
    double th = g.theta(0.05, 0.95);
    double delta = std::cos(th * std::numbers::pi / 2.0);
    SymbolSpec l = SymbolSpec::lens(th);
    for (cplx z : right_half_grid(g)) {
      double lhs = 1.0 - std::norm(eval(l, z));
      EXPECT_GE(lhs, 0.5 * delta * std::pow(std::abs(1.0 - z), th) * (1.0 - 1e-12)) << th << " " << z;
    }
  }
}

TEST(SymbolProps, OuterWeightDecay) {
  Gen g(13);
  for (int trial = 0; trial < 10; ++trial) {
    double th = g.theta(0.05, 0.95);
    double delta = std::cos(th * std::numbers::pi / 2.0);
    SymbolSpec w = SymbolSpec::outer_weight(th);
    for (cplx z : right_half_grid(g)) {
      double bound = std::exp(-delta / std::pow(std::abs(1.0 - z), th));
      EXPECT_LE(std::abs(eval(w, z)), bound * (1.0 + 1e-12) + 1e-300) << th << " " << z;
    }
  }
}

TEST(SymbolProps, ComposedWeightDecay) {
  Gen g(14);
  for (int trial = 0; trial < 6; ++trial) {
    double th = g.theta(0.2, 0.9);
    double delta = std::cos(th * std::numbers::pi / 2.0);
    SymbolSpec psi = SymbolSpec::compose(shifted_lens(th), SymbolSpec::outer_weight(th));
    std::vector<cplx> pts = disk_grid();
    for (int k = 0; k < 60; ++k) pts.push_back(g.disk(0.999));
    for (int k = 0; k < 40; ++k) {
      cplx p = g.near_one(6.0);
      if (std::abs(p) < 1.0) pts.push_back(p);
    }
    for (cplx z : pts) {
      double bound = std::exp(-delta * delta / std::pow(std::abs(1.0 - z), th * th));
      EXPECT_LE(std::abs(eval(psi, z)), bound * (1.0 + 1e-12) + 1e-300) << th << " " << z;
    }
  }
}

TEST(SymbolProps, ContactConstantStable) {
  for (double th : {0.3, 0.5, 0.7}) {
    SymbolSpec phi = shifted_lens(th);
    double coarse = contact_constant(phi, 16, 256);
    double fine = contact_constant(phi, 24, 1024);
    ASSERT_TRUE(std::isfinite(coarse) && std::isfinite(fine));
    EXPECT_LE(std::abs(fine - coarse) / fine, 0.02) << th << ": " << coarse << " vs " << fine;
  }
}

TEST(SymbolProps, PseudoHyperbolicMobiusInvariant) {
  Gen g(15);
  for (int trial = 0; trial < 500; ++trial) {
    cplx a = g.disk(), b = g.disk(), c = g.disk();
    auto T = [&](cplx z) { return (z - c) / (1.0 - std::conj(c) * z); };
    EXPECT_NEAR(pseudo_hyperbolic(T(a), T(b)), pseudo_hyperbolic(a, b), 1e-12);
  }
}

TEST(SymbolProps, TaylorRoundTrip) {
  Gen g(16);
  std::vector<SymbolSpec> zoo = {SymbolSpec::lens(0.5), shifted_lens(0.3), SymbolSpec::cusp(),
                                 SymbolSpec::blaschke({cplx(0.3, 0.2), cplx(-0.5, 0.1)}),
                                 SymbolSpec::blaschke_interp(0.5, 0.5, 20),
                                 SymbolSpec::compose(shifted_lens(0.5), SymbolSpec::outer_weight(0.5)),
                                 SymbolSpec::affine(0.4, cplx(0.1, -0.3))};
  for (const SymbolSpec& s : zoo) {
    for (int D : {16, 48}) {
      PowerSeries p = taylor(s, D);
      for (int k = 0; k < 20; ++k) {
        cplx z = std::polar(p.radius / 2.0, g.uniform(0.0, 2.0 * std::numbers::pi));
        EXPECT_LE(std::abs(p(z) - eval(s, z)), p.tail_error + p.aliasing_bound + 1e-14) << s.describe() << " D=" << D;
      }
    }
  }
}
