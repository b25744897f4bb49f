#include <algorithm>
#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "opnum/bidisk.hpp"
#include "opnum/errors.hpp"
#include "opnum/rates.hpp"

using namespace opnum;

namespace {

SingularSpectrum spectrum_of(std::vector<double> v) {
  SingularSpectrum s;
  s.values = std::move(v);
  s.stabilized.assign(s.values.size(), true);
  s.rel_change.assign(s.values.size(), 0.0);
  return s;
}

// All products sorted, the brute-force rearrangement.
std::vector<double> sorted_products(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  for (double x : a)
    for (double y : b) out.push_back(x * y);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

TEST(Symbol2D, DiagonalEvaluates) {
  Symbol2D d = Symbol2D::diagonal({0.5, 0.3});
  auto [a, b] = d(cplx(0.2, 0.4), cplx(-0.6, 0.1));
  EXPECT_LT(std::abs(a - cplx(0.1, 0.2)), 1e-15);
  EXPECT_LT(std::abs(b - cplx(-0.18, 0.03)), 1e-15);
  EXPECT_EQ(d.dimension(), 2);
}

TEST(Symbol2D, TriangularNeedsInnerH) {
  SymbolSpec phi = SymbolSpec::affine(0.5, 0.0);
  EXPECT_THROW(Symbol2D::triangular(phi, phi, SymbolSpec::lens(0.5)), InvalidSpec);
  EXPECT_THROW(Symbol2D::triangular(phi, phi, SymbolSpec::blaschke({cplx(0.5, 0.0)})), InvalidSpec);
  EXPECT_NO_THROW(Symbol2D::triangular(phi, phi, SymbolSpec::blaschke({cplx(0.0), cplx(0.5, 0.0)})));
  EXPECT_THROW(Symbol2D::diagonal({0.5, 1.0}), InvalidSpec);
}

TEST(Symbol2D, TriangularEvaluates) {
  Symbol2D t = Symbol2D::triangular(SymbolSpec::affine(0.5, 0.0), SymbolSpec::affine(0.3, 0.0), SymbolSpec::power(2));
  auto [a, b] = t(0.4, 0.5);
  EXPECT_NEAR(a.real(), 0.2, 1e-15);
  EXPECT_NEAR(b.real(), 0.12 * 0.25, 1e-15);
}

TEST(Symbol2D, JsonRoundTrip) {
  Symbol2D c = chobou_symbol(0.5);
  Symbol2D back = Symbol2D::from_json(c.to_json());
  EXPECT_EQ(back.variant(), Symbol2D::Variant::Triangular);
  EXPECT_EQ(back.to_json(), c.to_json());
  Symbol2D d = Symbol2D::from_json(Symbol2D::diagonal({0.25, 0.125}).to_json());
  EXPECT_EQ(d.radii(), (std::vector<double>{0.25, 0.125}));
}

TEST(Symbol2D, ChobouShape) {
  Symbol2D c = chobou_symbol(0.5);
  EXPECT_EQ(c.h().kind(), SymbolKind::Power);
  EXPECT_EQ(c.h().exponent(), 1);
  EXPECT_THROW(chobou_symbol(1.0), DomainError);
}

TEST(Tensor, MatchesSortedProducts) {
  std::vector<double> a = {1.0, 0.6, 0.2, 0.05}, b = {0.9, 0.3, 0.1};
  SingularSpectrum t = tensor_spectrum(spectrum_of(a), spectrum_of(b), 12);
  std::vector<double> want = sorted_products(a, b);
  ASSERT_EQ(t.size(), 12u);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_DOUBLE_EQ(t.values[i], want[i]);
  EXPECT_THROW(tensor_spectrum(spectrum_of(a), spectrum_of(b), 13), BudgetError);
}

TEST(Tensor, StabilityNeedsBothFactors) {
  SingularSpectrum a = spectrum_of({1.0, 0.5});
  SingularSpectrum b = spectrum_of({1.0, 0.1});
  b.stabilized[1] = false;
  SingularSpectrum t = tensor_spectrum(a, b, 4);
  // 1, 0.5, 0.1, 0.05; the unsettled 0.1 could move above 0.5
  EXPECT_TRUE(t.stabilized[0]);
  EXPECT_FALSE(t.stabilized[1]);
  EXPECT_FALSE(t.stabilized[2]);
  EXPECT_FALSE(t.stabilized[3]);
}

TEST(Kernel, NormAtOrigin) {
  EXPECT_DOUBLE_EQ(kernel_norm(0.0, 0.0), 1.0);
  EXPECT_NEAR(kernel_norm(0.6, 0.0), 1.25, 1e-15);
  EXPECT_THROW(kernel_norm(1.0, 0.0), DomainError);
}

TEST(Kernel, WitnessSeparatesLenses) {
  EXPECT_FALSE(glued_kernel_witness(SymbolSpec::affine(0.5, 0.0)).unbounded);
  EXPECT_FALSE(glued_kernel_witness(SymbolSpec::lens(0.4)).unbounded);
  KernelWitness hi = glued_kernel_witness(SymbolSpec::lens(0.6));
  EXPECT_TRUE(hi.unbounded);
  EXPECT_NEAR(hi.slope, 0.1, 0.01);
}

TEST(Glued, ContractionMatchesBergmanOracle) {
  // C_phi : B^2 -> H^2 sends sqrt(n+1) z^n to sqrt(n+1) r^n z^n.
  const double r = 0.5;
  std::vector<double> want;
  for (int n = 0; n < 40; ++n) want.push_back(std::sqrt(n + 1.0) * std::pow(r, n));
  std::sort(want.begin(), want.end(), std::greater<>());
  SingularSpectrum s = glued_spectrum(SymbolSpec::affine(r, 0.0), 64, 20);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_NEAR(s.values[i], want[i], 1e-12 * want[0]);
}

TEST(Glued, RejectsUnboundedLens) {
  EXPECT_THROW(glued_spectrum(SymbolSpec::lens(0.6), 64, 8), UnboundedOperator);
}

TEST(Merge, KWayMatchesSort) {
  std::vector<SingularSpectrum> blocks = {spectrum_of({0.9, 0.4, 0.1}), spectrum_of({0.5, 0.45}),
                                          spectrum_of({0.95, 0.01})};
  SingularSpectrum m = merge_blocks(blocks, 6);
  std::vector<double> want = {0.95, 0.9, 0.5, 0.45, 0.4, 0.1};
  std::vector<int> tags = {2, 0, 1, 1, 0, 0};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_DOUBLE_EQ(m.values[i], want[i]);
    EXPECT_EQ(m.block[i], tags[i]);
  }
}

TEST(Triangular, ContractionBlocksRearrange) {
  // phi = 0.5 z, psi = 0.3 z: T_k z^n = 0.3^k 0.5^n z^{n+k}.
  TriangularOptions opt;
  opt.floor = 1e-8;
  TriangularModel m = triangular_model(SymbolSpec::affine(0.5, 0.0), SymbolSpec::affine(0.3, 0.0), 64, 60, opt);
  EXPECT_NEAR(m.rho, 0.3, 1e-12);
  EXPECT_EQ(m.K, static_cast<int>(std::ceil(std::log(5e-9) / std::log(0.3))));
  std::vector<double> want = rearrangement_oracle({std::log(2.0), std::log(1.0 / 0.3)}, 60);
  for (std::size_t i = 0; i < 60; ++i) {
    if (want[i] <= m.ceiling) break;
    EXPECT_NEAR(m.merged.values[i], want[i], 1e-12) << i;
  }
  for (std::size_t k = 0; k < m.blocks.size(); ++k)
    EXPECT_LE(m.block_norm[k], std::pow(0.3, static_cast<double>(k)) * (1.0 + 1e-12));
}

TEST(Triangular, RequiresPsiInsideDisk) {
  EXPECT_THROW(triangular_model(SymbolSpec::affine(0.5, 0.0), SymbolSpec::identity(), 16, 4), DomainError);
}

TEST(Direct2D, DiagonalMatchesOracle) {
  SingularSpectrum s = direct2d_spectrum(Symbol2D::diagonal({0.5, 0.3}), 16, 30);
  std::vector<double> want = rearrangement_oracle({std::log(2.0), std::log(1.0 / 0.3)}, 30);
  for (std::size_t i = 0; i < 30; ++i) EXPECT_NEAR(s.values[i], want[i], 1e-12);
}

TEST(Direct2D, TriangularContractionMatchesOracle) {
  Symbol2D t = Symbol2D::triangular(SymbolSpec::affine(0.5, 0.0), SymbolSpec::affine(0.3, 0.0), SymbolSpec::power(1));
  SingularSpectrum s = direct2d_spectrum(t, 16, 20);
  std::vector<double> want = rearrangement_oracle({std::log(2.0), std::log(1.0 / 0.3)}, 20);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_NEAR(s.values[i], want[i], 1e-10);
}

TEST(Direct2D, GluedContractionMatchesGlued) {
  SingularSpectrum d = direct2d_spectrum(Symbol2D::glued(SymbolSpec::affine(0.5, 0.0)), 20, 12);
  SingularSpectrum g = glued_spectrum(SymbolSpec::affine(0.5, 0.0), 64, 12);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_NEAR(d.values[i], g.values[i], 1e-10);
}

TEST(Tensor, TruncatedFactorsLimitStability) {
  SingularSpectrum a = spectrum_of({1.0, 0.5, 0.25});
  SingularSpectrum b = spectrum_of({1.0, 0.1});
  SingularSpectrum t = tensor_spectrum(a, b, 6);
  // 1, .5, .25, .1, .05, .025; products below 0.25 may be missing from the lists
  EXPECT_TRUE(t.stabilized[2]);
  EXPECT_FALSE(t.stabilized[3]);
  EXPECT_FALSE(t.stabilized[5]);
}

TEST(Tensor, SeparatedLensBetaIncreases) {
  // beta_2 = 1 for a truly two-dimensional symbol; at desk scale b_n climbs slowly.
  SingularSpectrum a = singular_values(build_matrix(Weight::unit(), SymbolSpec::lens(0.5), 512, Basis::Auto), 512);
  SingularSpectrum b = singular_values(build_matrix(Weight::unit(), SymbolSpec::affine(0.3, 0.0), 128), 128);
  BetaEstimate e = beta_estimate(tensor_spectrum(a, b, 20000), 2);
  ASSERT_GE(e.b.size(), 10u);
  for (std::size_t i = 3; i < e.b.size(); ++i) EXPECT_GT(e.b[i], e.b[i - 1]) << "n=" << e.n[i];
  EXPECT_GT(e.b.back(), 0.55);
}
