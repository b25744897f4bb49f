#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>
#include <json.hpp>

#include "opnum/capacity.hpp"
#include "opnum/errors.hpp"
#include "opnum/rates.hpp"

using namespace opnum;

namespace {

SingularSpectrum spectrum_from(const std::function<double(int)>& a, int n) {
  SingularSpectrum s;
  for (int i = 1; i <= n; ++i) {
    s.values.push_back(a(i));
    s.stabilized.push_back(true);
  }
  return s;
}

}  // namespace

TEST(Families, NamesRoundTrip) {
  for (DecayFamily f : all_families()) EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_EQ(family_name(DecayFamily::SquareRoot), "exp(-beta*sqrt(n))");
  EXPECT_EQ(all_families().size(), 5u);
}

TEST(Families, Transforms) {
  EXPECT_DOUBLE_EQ(family_transform(DecayFamily::Linear, 9.0), 9.0);
  EXPECT_DOUBLE_EQ(family_transform(DecayFamily::SquareRoot, 9.0), 3.0);
  EXPECT_NEAR(family_transform(DecayFamily::CubeRoot, 27.0), 3.0, 1e-15);
  EXPECT_NEAR(family_transform(DecayFamily::SqrtOverLog, std::exp(4.0)), std::exp(2.0) / 2.0, 1e-12);
  EXPECT_NEAR(family_transform(DecayFamily::LinearOverLog, std::exp(2.0)), std::exp(2.0) / 2.0, 1e-12);
}

TEST(FitDecay, RecoversSqrtRate) {
  SingularSpectrum s = spectrum_from([](int n) { return 3.0 * std::exp(-1.7 * std::sqrt(n)); }, 80);
  DecayFit f = fit_decay(s, DecayFamily::SquareRoot);
  EXPECT_NEAR(f.beta, 1.7, 1e-12);
  EXPECT_NEAR(f.amplitude, 3.0, 1e-10);
  EXPECT_NEAR(f.r2, 1.0, 1e-14);
  EXPECT_EQ(f.n_lo, 6);
  EXPECT_EQ(f.n_hi, 80);
}

TEST(FitDecay, SkipsUnstabilized) {
  SingularSpectrum s = spectrum_from([](int n) { return std::exp(-0.5 * n); }, 30);
  for (int i = 20; i < 30; ++i) s.stabilized[i] = false;
  DecayFit f = fit_decay(s, DecayFamily::Linear);
  EXPECT_EQ(f.n_hi, 20);
  EXPECT_EQ(f.points, 15);
}

TEST(FitDecay, Errors) {
  SingularSpectrum flat = spectrum_from([](int) { return 0.5; }, 30);
  EXPECT_THROW(fit_decay(flat, DecayFamily::Linear), DomainError);
  SingularSpectrum short_s = spectrum_from([](int n) { return std::exp(-n); }, 10);
  EXPECT_THROW(fit_decay(short_s, DecayFamily::Linear), DomainError);
  EXPECT_THROW(fit_decay(std::vector<double>{1, 2}, std::vector<double>{1}, DecayFamily::Linear), DomainError);
}

TEST(FitDecay, JsonFields) {
  SingularSpectrum s = spectrum_from([](int n) { return std::exp(-0.25 * n); }, 40);
  nlohmann::json j = nlohmann::json::parse(fit_json(fit_decay(s, DecayFamily::Linear)));
  EXPECT_EQ(j["family"], "exp(-beta*n)");
  EXPECT_NEAR(j["beta"].get<double>(), 0.25, 1e-12);
  EXPECT_EQ(j["n_range"], nlohmann::json::array({6, 40}));
  EXPECT_TRUE(j.contains("amplitude") && j.contains("r2"));
}

TEST(Beta, GeometricIsBoundedBelow) {
  SingularSpectrum s = spectrum_from([](int n) { return std::pow(0.5, n - 1); }, 64);
  BetaEstimate b = beta_estimate(s, 1);
  EXPECT_EQ(b.trend, BetaTrend::BoundedBelow);
  EXPECT_NEAR(b.value, std::pow(0.5, 63.0 / 64.0), 1e-15);
  EXPECT_EQ(trend_name(b.trend), "bounded below 1");
}

TEST(Beta, SubExponentialApproachesOne) {
  SingularSpectrum s = spectrum_from([](int n) { return std::exp(-std::sqrt(n)); }, 400);
  BetaEstimate b = beta_estimate(s, 1);
  EXPECT_EQ(b.trend, BetaTrend::ApproachingOne);
  EXPECT_NEAR(b.value, std::exp(-0.05), 1e-15);
}

TEST(Beta, SquareIndicesInDimensionTwo) {
  SingularSpectrum s = spectrum_from([](int n) { return std::pow(0.9, n); }, 50);
  BetaEstimate b = beta_estimate(s, 2);
  EXPECT_EQ(b.n, (std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_NEAR(b.b[2], std::pow(std::pow(0.9, 9), 1.0 / 3.0), 1e-15);
  EXPECT_THROW(beta_estimate(spectrum_from([](int) { return 0.5; }, 8), 2), DomainError);
}

TEST(Rearrangement, EqualWeights) {
  std::vector<double> v = rearrangement_oracle({std::log(2.0), std::log(2.0)}, 6);
  std::vector<double> want = {1.0, 0.5, 0.5, 0.25, 0.25, 0.25};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(v[i], want[i], 1e-15);
  EXPECT_THROW(rearrangement_oracle({1.0, 0.0}, 3), DomainError);
}

TEST(CountLattice, SmallOracle) {
  LatticeCount c = count_lattice({1.0, 2.0}, 10.0);
  std::uint64_t brute = 0;
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; a + 2 * b <= 10; ++b) ++brute;
  EXPECT_EQ(c.count, brute);
  EXPECT_EQ(c.count, 36u);
  EXPECT_DOUBLE_EQ(c.asymptotic, 25.0);
  EXPECT_DOUBLE_EQ(c.ratio, 36.0 / 25.0);
}

TEST(CountLattice, ThreeWeights) {
  LatticeCount c = count_lattice({1.0, 1.0, 1.0}, 4.0);
  EXPECT_EQ(c.count, 35u);  // C(7, 3)
  EXPECT_NEAR(c.asymptotic, 64.0 / 6.0, 1e-12);
}

TEST(EstimInf, SingleLevel) {
  Level L{0.75, 0.1, 0.2, true};
  BoundValue v = estim_inf_bound(16, {L});
  double want = 0.5 * std::exp(-32.0 * std::sqrt(std::log(10.0)) * std::sqrt(std::log(5.0)));
  EXPECT_NEAR(v.value / want, 1.0, 1e-13);
  EXPECT_TRUE(v.proxy);
  EXPECT_EQ(v.level, 0);
}

TEST(EstimInf, PicksBestLevel) {
  std::vector<Level> lv = {{0.5, 0.01, 0.02, false}, {0.9, 0.3, 0.5, false}};
  EXPECT_EQ(estim_inf_bound(4, lv).level, 1);
  EXPECT_THROW(estim_inf_bound(4, {{0.5, 0.5, 0.4, false}}), DomainError);
  EXPECT_THROW(estim_inf_bound(0, lv), DomainError);
}

TEST(ChobouBudget, Formula) {
  const double C = 2.0, delta = 0.7, theta = 0.5;
  ChobouBudget b = chobou_budget(64, theta, C, delta);
  double a = std::log(std::sqrt(16.0 * C * C + 1.0) / (4.0 * C));
  EXPECT_NEAR(b.b, a / (delta * delta), 1e-15);
  long long d = 0;
  for (int k = 1; k <= 64; ++k) {
    int mk = std::max(1, static_cast<int>(std::floor(std::log(b.b * 64 / k) / (theta * theta * std::log(2.0)))) + 1);
    EXPECT_EQ(b.m[static_cast<std::size_t>(k - 1)], mk);
    d += 64LL * mk;
  }
  EXPECT_EQ(b.d, d);
  EXPECT_DOUBLE_EQ(b.alpha, static_cast<double>(d) / 4096.0);
}

TEST(ChobouBudget, Validation) {
  EXPECT_THROW(chobou_budget(0, 0.5, 2.0, 0.5), DomainError);
  EXPECT_THROW(chobou_budget(4, 0.5, 0.5, 0.5), DomainError);
  EXPECT_THROW(chobou_budget(4, 1.0, 2.0, 0.5), DomainError);
}

// ---------------------------------------------------------------- capacity

TEST(Capacity, GreenDisk) {
  EXPECT_NEAR(green_capacity_disk(std::exp(-1.0)), 1.0, 1e-15);
  EXPECT_NEAR(green_capacity_disk(0.5), 1.0 / std::log(2.0), 1e-15);
  EXPECT_THROW(green_capacity_disk(1.0), DomainError);
  EXPECT_THROW(green_capacity_disk(0.0), DomainError);
}

TEST(Capacity, SeminalPolydisk) {
  CapacityValue c = tau_polydisk({std::exp(-1.0), std::exp(-1.0)});
  EXPECT_NEAR(c.tau, 1.0, 1e-15);
  EXPECT_EQ(c.m, 2);
  EXPECT_NEAR(c.gamma, std::exp(-std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(c.gamma, 0.243117, 5e-7);
  EXPECT_FALSE(c.proxy);
}

TEST(Capacity, GammaFromTau) {
  EXPECT_NEAR(gamma_from_tau(1.0, 2), std::exp(-std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(gamma_from_tau(green_capacity_disk(0.3), 1), 0.3, 1e-15);
  EXPECT_THROW(gamma_from_tau(0.0, 2), DomainError);
}

TEST(Capacity, GrowthProxy) {
  EXPECT_EQ(capacity_growth_proxy(0.0), 0.0);
  EXPECT_NEAR(capacity_growth_proxy(1.0 - std::exp(-3.0)), 3.0, 1e-12);
  EXPECT_THROW(capacity_growth_proxy(1.0), DomainError);
}
