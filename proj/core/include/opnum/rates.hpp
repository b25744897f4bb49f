#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "opnum/hardy1d.hpp"

namespace opnum {

// a_n ~ A exp(-beta t(n)) with t(n) one of
//   n, sqrt(n), n^{1/3}, sqrt(n / log n), n / log n
enum class DecayFamily { Linear, SquareRoot, CubeRoot, SqrtOverLog, LinearOverLog };

std::string_view family_name(DecayFamily f);
DecayFamily family_from_name(std::string_view name);
double family_transform(DecayFamily f, double n);
const std::vector<DecayFamily>& all_families();

struct DecayFit {
  DecayFamily family = DecayFamily::Linear;
  double beta = 0.0;
  double amplitude = 0.0;
  double r2 = 0.0;
  int n_lo = 0;
  int n_hi = 0;
  int points = 0;
};

struct FitOptions {
  int drop = 5;  // leading indices skipped
  int min_points = 8;
};

// Least squares of log a_n on t(n) over stabilized entries with n > drop.
DecayFit fit_decay(const SingularSpectrum& s, DecayFamily family, const FitOptions& opt = {});
// Same on explicit (n, a_n) pairs; every pair is used.
DecayFit fit_decay(const std::vector<double>& n, const std::vector<double>& a, DecayFamily family,
                   const FitOptions& opt = {});

std::string fit_json(const DecayFit& f);

enum class BetaTrend { ApproachingOne, BoundedBelow, Inconclusive };
std::string_view trend_name(BetaTrend t);

struct BetaOptions {
  double plateau = 0.02;      // spread of the last three b_n
  double below = 0.98;        // max of the last three b_n
  double approach = 0.9;      // final b_n for the approaching rule
};

struct BetaEstimate {
  int d = 1;
  std::vector<int> n;
  std::vector<double> b;  // a_{n^d}^{1/n}
  BetaTrend trend = BetaTrend::Inconclusive;
  double value = 0.0;  // final b_n
  BetaOptions thresholds;
};

BetaEstimate beta_estimate(const SingularSpectrum& s, int d, const BetaOptions& opt = {});

// First `count` values of exp(-sum lambda_k n_k) over multi-indices, non-increasing.
std::vector<double> rearrangement_oracle(const std::vector<double>& lambda, std::size_t count);

struct LatticeCount {
  std::uint64_t count = 0;
  double asymptotic = 0.0;  // A^m / (prod lambda_k m!)
  double ratio = 0.0;
};

// Multi-indices with sum lambda_k n_k <= A.
LatticeCount count_lattice(const std::vector<double>& lambda, double A);

struct Level {
  double r = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  bool proxy = false;
};

struct BoundValue {
  double value = 0.0;
  int level = -1;  // arg sup
  bool proxy = false;
};

// sup_l sqrt(1 - r_l) exp(-8 sqrt(N) sqrt(log 1/delta_l) sqrt(log 1/Gamma_l))
BoundValue estim_inf_bound(int N, const std::vector<Level>& levels);

struct ChobouBudget {
  std::vector<int> m;  // m_1 .. m_n
  long long d = 0;     // sum_k n m_k
  double alpha = 0.0;  // d / n^2
  double b = 0.0;
};

// m_k = floor(log(b n / k) / (theta^2 log 2)) + 1 with b = a / delta^2 and
// a = log(sqrt(16 C^2 + 1) / (4 C)); m_k is clamped to at least 1.
ChobouBudget chobou_budget(int n, double theta, double C, double delta);

}  // namespace opnum
