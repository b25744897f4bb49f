#include "opnum/rates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <tuple>

#include <json.hpp>

#include "opnum/errors.hpp"

namespace opnum {

std::string_view family_name(DecayFamily f) {
  switch (f) {
    case DecayFamily::Linear: return "exp(-beta*n)";
    case DecayFamily::SquareRoot: return "exp(-beta*sqrt(n))";
    case DecayFamily::CubeRoot: return "exp(-beta*n^(1/3))";
    case DecayFamily::SqrtOverLog: return "exp(-beta*sqrt(n/log(n)))";
    case DecayFamily::LinearOverLog: return "exp(-beta*n/log(n))";
  }
  return "unknown";
}

DecayFamily family_from_name(std::string_view name) {
  for (DecayFamily f : all_families())
    if (family_name(f) == name) return f;
  if (name == "linear") return DecayFamily::Linear;
  if (name == "sqrt") return DecayFamily::SquareRoot;
  if (name == "cbrt") return DecayFamily::CubeRoot;
  if (name == "sqrt_log") return DecayFamily::SqrtOverLog;
  if (name == "linear_log") return DecayFamily::LinearOverLog;
  throw InvalidSpec("unknown decay family '" + std::string(name) + "'");
}

const std::vector<DecayFamily>& all_families() {
  static const std::vector<DecayFamily> f = {DecayFamily::Linear, DecayFamily::SquareRoot, DecayFamily::CubeRoot,
                                             DecayFamily::SqrtOverLog, DecayFamily::LinearOverLog};
  return f;
}

double family_transform(DecayFamily f, double n) {
  switch (f) {
    case DecayFamily::Linear: return n;
    case DecayFamily::SquareRoot: return std::sqrt(n);
    case DecayFamily::CubeRoot: return std::cbrt(n);
    case DecayFamily::SqrtOverLog: return std::sqrt(n / std::log(n));
    case DecayFamily::LinearOverLog: return n / std::log(n);
  }
  return n;
}

DecayFit fit_decay(const std::vector<double>& n, const std::vector<double>& a, DecayFamily family,
                   const FitOptions& opt) {
  if (n.size() != a.size()) throw DomainError("fit_decay: size mismatch");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(a[i] > 0.0)) continue;
    if ((family == DecayFamily::SqrtOverLog || family == DecayFamily::LinearOverLog) && !(n[i] > 1.0)) continue;
    x.push_back(family_transform(family, n[i]));
    y.push_back(std::log(a[i]));
  }
  if (static_cast<int>(x.size()) < opt.min_points) throw DomainError("fit_decay: too few positive values to fit");
  const double k = static_cast<double>(x.size());
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= k;
  my /= k;
  long double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0)) throw DomainError("fit_decay: degenerate index range");
  const double slope = static_cast<double>(sxy / sxx);
  DecayFit f;
  f.family = family;
  f.beta = -slope;
  f.amplitude = std::exp(static_cast<double>(my - slope * mx));
  f.r2 = syy > 0 ? std::clamp(static_cast<double>(sxy * sxy / (sxx * syy)), 0.0, 1.0) : 1.0;
  if (!(f.beta > 0.0)) throw DomainError("fit_decay: input does not decay");
  auto [lo, hi] = std::minmax_element(n.begin(), n.end());
  f.n_lo = static_cast<int>(*lo);
  f.n_hi = static_cast<int>(*hi);
  f.points = static_cast<int>(x.size());
  return f;
}

DecayFit fit_decay(const SingularSpectrum& s, DecayFamily family, const FitOptions& opt) {
  std::vector<double> n, a;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    int idx = static_cast<int>(i) + 1;
    if (idx <= opt.drop || !s.stabilized[i]) continue;
    n.push_back(idx);
    a.push_back(s.values[i]);
  }
  if (a.empty() || std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; }))
    throw DomainError("fit_decay: no non-zero stabilized values");
  return fit_decay(n, a, family, opt);
}

std::string fit_json(const DecayFit& f) {
  nlohmann::json j;
  j["family"] = std::string(family_name(f.family));
  j["beta"] = f.beta;
  j["amplitude"] = f.amplitude;
  j["r2"] = f.r2;
  j["n_range"] = {f.n_lo, f.n_hi};
  return j.dump();
}

std::string_view trend_name(BetaTrend t) {
  switch (t) {
    case BetaTrend::ApproachingOne: return "approaching 1";
    case BetaTrend::BoundedBelow: return "bounded below 1";
    case BetaTrend::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

BetaEstimate beta_estimate(const SingularSpectrum& s, int d, const BetaOptions& opt) {
  if (d < 1) throw DomainError("beta_estimate: d must be >= 1");
  BetaEstimate e;
  e.d = d;
  e.thresholds = opt;
  for (int n = 1;; ++n) {
    double idx = std::pow(static_cast<double>(n), d);
    if (idx > static_cast<double>(s.values.size())) break;
    auto i = static_cast<std::size_t>(idx) - 1;
    if (!s.stabilized[i] || !(s.values[i] > 0.0)) continue;
    e.n.push_back(n);
    e.b.push_back(std::pow(s.values[i], 1.0 / n));
  }
  if (e.b.size() < 3) throw DomainError("beta_estimate: need a_{n^d} for at least three n");
  const std::size_t k = e.b.size();
  e.value = e.b.back();
  bool increasing = true;
  for (std::size_t i = 1; i < k; ++i) increasing = increasing && e.b[i] > e.b[i - 1];
  double slope = e.b[k - 1] - e.b[k - 2];
  auto tail = std::minmax({e.b[k - 3], e.b[k - 2], e.b[k - 1]});
  if (increasing && e.value > opt.approach && slope > 0.0)
    e.trend = BetaTrend::ApproachingOne;
  else if (tail.second - tail.first <= opt.plateau && tail.second < opt.below)
    e.trend = BetaTrend::BoundedBelow;
  else
    e.trend = BetaTrend::Inconclusive;
  return e;
}

std::vector<double> rearrangement_oracle(const std::vector<double>& lambda, std::size_t count) {
  if (lambda.empty()) throw DomainError("rearrangement_oracle: need at least one weight");
  for (double l : lambda)
    if (!(l > 0.0)) throw DomainError("rearrangement_oracle: weights must be positive");
  const std::size_t m = lambda.size();
  // Each multi-index is reached once: from n, only coordinates k >= the last
  // non-zero coordinate are incremented.
  struct Node {
    double exponent;
    std::vector<int> n;
    std::size_t last;
  };
  auto cmp = [](const Node& a, const Node& b) {
    if (a.exponent != b.exponent) return a.exponent > b.exponent;
    return a.n > b.n;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
  heap.push({0.0, std::vector<int>(m, 0), 0});
  std::vector<double> out;
  out.reserve(count);
  while (out.size() < count && !heap.empty()) {
    Node top = heap.top();
    heap.pop();
    out.push_back(std::exp(-top.exponent));
    for (std::size_t k = top.last; k < m; ++k) {
      Node next = top;
      next.n[k] += 1;
      next.exponent += lambda[k];
      next.last = k;
      heap.push(std::move(next));
    }
  }
  return out;
}

LatticeCount count_lattice(const std::vector<double>& lambda, double A) {
  if (lambda.empty()) throw DomainError("count_lattice: need at least one weight");
  if (!(A > 0.0)) throw DomainError("count_lattice: A must be positive");
  for (double l : lambda)
    if (!(l > 0.0)) throw DomainError("count_lattice: weights must be positive");
  constexpr std::uint64_t kCap = 100000000ULL;
  const double slack = 1e-12 * A;
  std::function<std::uint64_t(std::size_t, double)> rec = [&](std::size_t k, double rem) -> std::uint64_t {
    auto top = static_cast<std::uint64_t>(std::floor((rem + slack) / lambda[k]));
    if (k + 1 == lambda.size()) return top + 1;
    std::uint64_t total = 0;
    for (std::uint64_t n = 0; n <= top; ++n) {
      total += rec(k + 1, rem - static_cast<double>(n) * lambda[k]);
      if (total > kCap) throw BudgetError("count_lattice: count exceeds 1e8");
    }
    return total;
  };
  LatticeCount c;
  c.count = rec(0, A);
  if (c.count > kCap) throw BudgetError("count_lattice: count exceeds 1e8");
  const int m = static_cast<int>(lambda.size());
  double log_asym = m * std::log(A) - std::lgamma(m + 1.0);
  for (double l : lambda) log_asym -= std::log(l);
  c.asymptotic = std::exp(log_asym);
  c.ratio = static_cast<double>(c.count) / c.asymptotic;
  return c;
}

BoundValue estim_inf_bound(int N, const std::vector<Level>& levels) {
  if (N < 1) throw DomainError("estim_inf_bound: N must be positive");
  BoundValue best;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const Level& L = levels[l];
    if (!(L.r >= 0.0 && L.r < 1.0)) throw DomainError("estim_inf_bound: r_l must lie in [0,1)");
    if (!(L.delta > 0.0 && L.delta < 1.0) || !(L.gamma > 0.0 && L.gamma < 1.0))
      throw DomainError("estim_inf_bound: delta_l and Gamma_l must lie in (0,1)");
    if (L.delta > L.gamma) throw DomainError("estim_inf_bound: hypothesis delta_l <= Gamma_l violated");
    double v = std::sqrt(1.0 - L.r) *
               std::exp(-8.0 * std::sqrt(static_cast<double>(N)) * std::sqrt(-std::log(L.delta)) *
                        std::sqrt(-std::log(L.gamma)));
    if (v > best.value || best.level < 0) {
      best.value = v;
      best.level = static_cast<int>(l);
      best.proxy = L.proxy;
    }
  }
  return best;
}

ChobouBudget chobou_budget(int n, double theta, double C, double delta) {
  if (n < 1) throw DomainError("chobou_budget: n must be positive");
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("chobou_budget: theta must lie in (0,1)");
  if (!(C >= 1.0)) throw DomainError("chobou_budget: C must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("chobou_budget: delta must lie in (0,1)");
  ChobouBudget out;
  double a = special_rate(C);
  out.b = a / (delta * delta);
  const double denom = theta * theta * std::log(2.0);
  for (int k = 1; k <= n; ++k) {
    int mk = static_cast<int>(std::floor(std::log(out.b * n / k) / denom)) + 1;
    mk = std::max(1, mk);
    out.m.push_back(mk);
    out.d += static_cast<long long>(n) * mk;
  }
  out.alpha = static_cast<double>(out.d) / (static_cast<double>(n) * n);
  return out;
}

}  // namespace opnum
