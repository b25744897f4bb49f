#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "opnum/bidisk.hpp"
#include "opnum/capacity.hpp"
#include "opnum/errors.hpp"
#include "opnum/geometry.hpp"
#include "opnum/hardy1d.hpp"
#include "opnum/rates.hpp"
#include "opnum/spectrum_io.hpp"
#include "opnum_lab/lab.hpp"

namespace opnum::lab {

namespace {

using nlohmann::json;

void require_cap(const char* what, int value, int cap) {
  if (value > cap)
    throw BudgetError(std::string(what) + " = " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
}

void add_spectrum(Result& r, const std::string& series, const SingularSpectrum& s) {
  for (std::size_t i = 0; i < s.values.size(); ++i)
    r.rows.push_back({series, static_cast<long long>(i) + 1, s.values[i], static_cast<bool>(s.stabilized[i]), false});
}

json spectrum_info(const SingularSpectrum& s) {
  return {{"truncation", s.truncation},
          {"stable_prefix", s.stable_prefix()},
          {"stabilized", s.stabilized_values().size()},
          {"certificate", s.certificate},
          {"stabilization_tol", s.stabilization_tol}};
}

json fit_or_error(const SingularSpectrum& s, DecayFamily f) {
  try {
    return json::parse(fit_json(fit_decay(s, f)));
  } catch (const DomainError& e) {
    return {{"family", std::string(family_name(f))}, {"error", e.what()}};
  }
}

json beta_json(const BetaEstimate& b) {
  return {{"d", b.d},
          {"n", b.n},
          {"b", b.b},
          {"trend", std::string(trend_name(b.trend))},
          {"value", b.value},
          {"thresholds",
           {{"plateau", b.thresholds.plateau}, {"below", b.thresholds.below}, {"approach", b.thresholds.approach}}}};
}

SingularSpectrum exact_spectrum(const Eigen::MatrixXd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  SingularSpectrum s;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    s.values.push_back(svd.singularValues()(i));
    s.stabilized.push_back(true);
    s.rel_change.push_back(0.0);
  }
  return s;
}

// -------------------------------------------------------------- experiments

Result diag_seminal(const Params& p, const Caps& caps) {
  const double r = p.real("r");
  const int N = p.integer("N");
  require_cap("N", N, caps.N_max);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("diag-seminal: r must lie in (0,1)");
  Result out;
  OperatorMatrix M = build_matrix(Weight::unit(), SymbolSpec::affine(r, 0.0), N, Basis::Hardy);
  SingularSpectrum s = singular_values(M, static_cast<std::size_t>(N));
  add_spectrum(out, "a_n", s);
  double err = 0.0;
  for (int n = 1; n <= N; ++n) {
    double exact = std::pow(r, n - 1);
    out.rows.push_back({"r^(n-1)", n, exact, true, false});
    err = std::max(err, std::abs(s.values[static_cast<std::size_t>(n) - 1] - exact));
  }
  out.summary["spectrum"] = spectrum_info(s);
  out.summary["max_abs_error"] = err;
  out.summary["fit"] = fit_or_error(s, DecayFamily::Linear);
  out.summary["expected_beta"] = -std::log(r);
  out.truncations["N"] = N;
  out.tail_budgets["a_n"] = s.tail_budget;
  return out;
}

Result tensor_lemma(const Params& p, const Caps&) {
  const int pairs = p.integer("pairs");
  const int m = p.integer("m");
  const int n = p.integer("n");
  const auto seed = static_cast<std::uint64_t>(p.integer("seed"));
  if (pairs < 1 || m < 1 || n < 1) throw DomainError("tensor-lemma: sizes must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Result out;
  double worst = 0.0, min_slack = 1e300;
  for (int t = 0; t < pairs; ++t) {
    Eigen::MatrixXd A(m, m), B(n, n);
    for (int i = 0; i < m * m; ++i) A.data()[i] = U(rng);
    for (int i = 0; i < n * n; ++i) B.data()[i] = U(rng);
    Eigen::MatrixXd K(m * n, m * n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) K.block(i * n, j * n, n, n) = A(i, j) * B;
    SingularSpectrum S = exact_spectrum(A), T = exact_spectrum(B), KS = exact_spectrum(K);
    SingularSpectrum merged = tensor_spectrum(S, T, static_cast<std::size_t>(m * n));
    double err = 0.0;
    for (std::size_t i = 0; i < merged.values.size(); ++i) err = std::max(err, std::abs(merged.values[i] - KS.values[i]));
    double slack = 1e300;
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= n; ++b) {
        std::size_t idx = static_cast<std::size_t>(a * b) - 1;
        slack = std::min(slack, merged.values[idx] - S.values[a - 1] * T.values[b - 1]);
      }
    out.rows.push_back({"kronecker_gap", t + 1, err, true, false});
    out.rows.push_back({"lemma_slack", t + 1, slack, true, false});
    worst = std::max(worst, err);
    min_slack = std::min(min_slack, slack);
  }
  out.summary["max_kronecker_gap"] = worst;
  out.summary["min_lemma_slack"] = min_slack;
  out.summary["pairs"] = pairs;
  out.truncations["sizes"] = {m, n};
  return out;
}

Result bilens_trichotomy(const Params& p, const Caps& caps) {
  const std::vector<double> thetas = p.reals("thetas");
  const int columns = p.integer("columns");
  require_cap("columns", columns, caps.N_max);
  Result out;
  json table = json::array();
  for (double th : thetas) {
    SymbolSpec lens = SymbolSpec::lens(th);
    const std::string tag = "theta=" + format_double(th);
    HsNorm hs = hs_norm(Weight::unit(), lens, 2);
    for (const auto& [nodes, v] : hs.report.history)
      out.rows.push_back({"hs_integral_" + tag, nodes, v, hs.report.converged, false});
    std::vector<double> sq = image_norms_squared(Weight::unit(), lens, columns + 1);
    double peak = 0.0;
    for (int k = 0; k <= columns; ++k) {
      double v = std::sqrt((k + 1.0) * sq[static_cast<std::size_t>(k)]);
      peak = std::max(peak, v);
      if ((k & (k - 1)) == 0 || k == columns) out.rows.push_back({"bergman_column_norm_" + tag, k, v, true, false});
    }
    KernelWitness kw = glued_kernel_witness(lens);
    for (std::size_t j = 0; j < kw.a.size(); ++j)
      out.rows.push_back({"kernel_ratio_" + tag, static_cast<long long>(j) + 1, kw.ratio[j], true, false});
    table.push_back({{"theta", th},
                     {"hs_converged", hs.report.converged},
                     {"hs_divergent", hs.divergent},
                     {"hs_value", hs.value},
                     {"hs_nodes", hs.report.nodes},
                     {"hs_last_rel_change", hs.report.last_rel_change},
                     {"max_bergman_column_norm", peak},
                     {"kernel_slope", kw.slope},
                     {"kernel_unbounded", kw.unbounded}});
  }
  out.summary["thetas"] = table;
  out.truncations["columns"] = columns;
  return out;
}

Result glued_rate(const Params& p, const Caps& caps) {
  const double th = p.real("theta");
  const int N = p.integer("N");
  require_cap("N", N, caps.N_max);
  SingularSpectrum s = glued_spectrum(SymbolSpec::lens(th), N, static_cast<std::size_t>(p.integer("keep")));
  Result out;
  add_spectrum(out, "a_n", s);
  out.summary["spectrum"] = spectrum_info(s);
  json fits = json::array();
  for (DecayFamily f : {DecayFamily::SquareRoot, DecayFamily::Linear, DecayFamily::CubeRoot})
    fits.push_back(fit_or_error(s, f));
  out.summary["fits"] = fits;
  out.truncations["N"] = N;
  out.truncations["poles"] = s.truncation;
  out.tail_budgets["a_n"] = s.tail_budget;
  return out;
}

// Shared by the lens and cusp upper/lower bound experiments.
Result triangular_contact(const Params& p, const Caps& caps, const SymbolSpec& phi, const std::vector<DecayFamily>& fams,
                          bool lens) {
  const double c = p.real("c");
  const double sigma = p.real("sigma");
  const double eps1 = p.real("eps1");
  const int J = p.integer("J");
  const int N = p.integer("N");
  const double floor = p.real("floor");
  require_cap("N", N, caps.N_max);
  if (!(c > 0.0 && c < 1.0)) throw DomainError("c must lie in (0,1)");
  SymbolSpec B = SymbolSpec::blaschke_interp(sigma, eps1, J);
  SymbolSpec psi = SymbolSpec::scalar(c, B);

  TriangularOptions opt;
  opt.floor = floor;
  const double rho = boundary_sup(psi, 16384);
  opt.blocks = std::max(0, static_cast<int>(std::ceil(std::log(floor / 2.0) / std::log(rho))));
  require_cap("K", opt.blocks, caps.K_max);
  TriangularModel model = triangular_model(phi, psi, N, static_cast<std::size_t>(p.integer("keep")), opt);

  Result out;
  add_spectrum(out, "a_n", model.merged);
  json fits = json::array();
  for (DecayFamily f : fams) fits.push_back(fit_or_error(model.merged, f));
  out.summary["spectrum"] = spectrum_info(model.merged);
  out.summary["fits"] = fits;
  out.summary["rho"] = model.rho;
  out.summary["K"] = model.K;
  out.summary["discarded_ceiling"] = model.ceiling;

  // Lower-bound shape at the level choice of the proof: l = N^{1/3} for the
  // lens, l = sqrt(N / log N) for the cusp. Gamma_l comes from the capacity
  // growth proxy of the image of |z| <= r_l, so every value is a proxy.
  const int max_level = p.integer("levels");
  std::vector<BlaschkeLevel> circles = blaschke_radii(sigma, eps1, max_level);
  std::vector<double> ns, vs;
  for (const auto& L : circles) {
    double cap = capacity_growth_proxy(pseudo_diameter(phi, L.radius, 512));
    out.rows.push_back({"capacity_proxy", L.level, cap, true, true});
    if (!(cap > 0.0)) continue;
    Level lv{L.radius, c * L.delta_floor, std::exp(-1.0 / cap), true};
    if (!(lv.delta > 0.0) || lv.delta > lv.gamma) continue;
    const double l = L.level;
    long long N_l = 0;
    if (lens) {
      N_l = static_cast<long long>(l * l * l);
    } else {
      // smallest N with sqrt(N / log N) >= l
      N_l = 3;
      while (std::sqrt(N_l / std::log(static_cast<double>(N_l))) < l) ++N_l;
    }
    BoundValue bv = estim_inf_bound(static_cast<int>(N_l), {lv});
    out.rows.push_back({"lower_bound_shape", N_l, bv.value, true, true});
    ns.push_back(static_cast<double>(N_l));
    vs.push_back(bv.value);
  }
  if (ns.size() >= 3) {
    json shape = json::array();
    FitOptions fo;
    fo.min_points = 3;
    for (DecayFamily f : fams) {
      try {
        shape.push_back(json::parse(fit_json(fit_decay(ns, vs, f, fo))));
      } catch (const DomainError& e) {
        shape.push_back({{"family", std::string(family_name(f))}, {"error", e.what()}});
      }
    }
    out.summary["lower_bound_fits"] = shape;
  }
  out.summary["lower_bound_proxy"] = true;
  out.summary["symbol"] = lens ? "lens" : "cusp";
  out.truncations["N"] = N;
  out.truncations["K"] = model.K;
  out.truncations["blocks"] = json::array();
  for (const auto& b : model.blocks) out.truncations["blocks"].push_back(b.truncation);
  out.tail_budgets["merged"] = model.merged.tail_budget;
  out.tail_budgets["discarded_ceiling"] = model.ceiling;
  return out;
}

Result triangular_lens(const Params& p, const Caps& caps) {
  return triangular_contact(p, caps, SymbolSpec::lens(p.real("theta")), {DecayFamily::CubeRoot, DecayFamily::SquareRoot},
                            true);
}

Result triangular_cusp(const Params& p, const Caps& caps) {
  return triangular_contact(p, caps, SymbolSpec::cusp(), {DecayFamily::SqrtOverLog, DecayFamily::SquareRoot}, false);
}

Result chobou(const Params& p, const Caps& caps) {
  const double th = p.real("theta");
  const int N = p.integer("N");
  const int D = p.integer("D");
  require_cap("N", N, caps.N_max);
  require_cap("D", D, caps.D_max);
  Symbol2D Phi = chobou_symbol(th);
  TriangularOptions opt;
  opt.floor = p.real("floor");
  const double rho = boundary_sup(Phi.psi(), 16384);
  opt.blocks = std::max(0, static_cast<int>(std::ceil(std::log(opt.floor / 2.0) / std::log(rho))));
  require_cap("K", opt.blocks, caps.K_max);
  TriangularModel model = triangular_model(Phi.phi(), Phi.psi(), N, static_cast<std::size_t>(p.integer("keep")), opt);

  Result out;
  add_spectrum(out, "a_n", model.merged);
  for (std::size_t i = 0; i < model.merged.block.size(); ++i)
    out.rows.push_back({"block", static_cast<long long>(i) + 1, static_cast<double>(model.merged.block[i]),
                        static_cast<bool>(model.merged.stabilized[i]), false});
  out.summary["spectrum"] = spectrum_info(model.merged);
  out.summary["fit"] = fit_or_error(model.merged, DecayFamily::SquareRoot);
  try {
    out.summary["beta"] = beta_json(beta_estimate(model.merged, 2));
  } catch (const DomainError& e) {
    out.summary["beta"] = {{"error", e.what()}};
  }
  out.summary["phi_sup"] = boundary_sup(Phi.phi(), 16384);
  out.summary["psi_sup"] = model.rho;
  out.summary["K"] = model.K;
  out.summary["discarded_ceiling"] = model.ceiling;

  const double C = std::max(1.0, contact_constant(Phi.phi(), 20, 256));
  const double delta = std::cos(th * std::numbers::pi / 2.0);
  json budget = json::array();
  for (int n : {8, 16, 32, 64, 128, 256, 512}) {
    ChobouBudget b = chobou_budget(n, th, C, delta);
    budget.push_back({{"n", n}, {"d", b.d}, {"alpha", b.alpha}});
    out.rows.push_back({"budget_alpha", n, b.alpha, true, false});
  }
  out.summary["budget"] = {{"C", C}, {"delta", delta}, {"table", budget}};

  if (D > 0) {
    SingularSpectrum d2 = direct2d_spectrum(Phi, D, 30);
    add_spectrum(out, "direct2d", d2);
    out.truncations["D"] = D;
    out.tail_budgets["direct2d"] = d2.tail_budget;
  }
  out.truncations["N"] = N;
  out.truncations["K"] = model.K;
  out.truncations["blocks"] = json::array();
  for (const auto& b : model.blocks) out.truncations["blocks"].push_back(b.truncation);
  out.tail_budgets["merged"] = model.merged.tail_budget;
  out.tail_budgets["discarded_ceiling"] = model.ceiling;
  return out;
}

Result blaschke_circles(const Params& p, const Caps&) {
  const double sigma = p.real("sigma");
  const double eps1 = p.real("eps1");
  const int J = p.integer("J");
  const int levels = p.integer("levels");
  const int samples = p.integer("samples");
  std::vector<BlaschkeLevel> circles = blaschke_radii(sigma, eps1, levels);
  SymbolSpec B = SymbolSpec::blaschke_interp(sigma, eps1, J);
  Result out;
  json table = json::array();
  std::vector<double> l, rho;
  bool all_above = true;
  double c1 = 1e300, c2 = 0.0;
  for (const auto& L : circles) {
    double mn = 1e300;
    for (int k = 0; k < samples; ++k) {
      double t = 2.0 * std::numbers::pi * k / samples;
      mn = std::min(mn, std::abs(eval(B, std::polar(L.radius, t))));
    }
    all_above = all_above && mn >= L.delta_floor && L.delta_floor > 0.0;
    out.rows.push_back({"one_minus_r", L.level, L.rho, true, false});
    out.rows.push_back({"delta_floor", L.level, L.delta_floor, true, false});
    out.rows.push_back({"sampled_min_abs_B", L.level, mn, true, false});
    double ratio = L.rho / std::pow(sigma, L.level);
    c1 = std::min(c1, ratio);
    c2 = std::max(c2, ratio);
    l.push_back(L.level);
    rho.push_back(L.rho);
    table.push_back({{"level", L.level}, {"case", L.proof_case}, {"p", L.p}, {"radius", L.radius}, {"one_minus_r", L.rho},
                     {"delta_floor", L.delta_floor}, {"sampled_min", mn}});
  }
  out.summary["levels"] = table;
  out.summary["floor_respected"] = all_above;
  out.summary["C1"] = c1;
  out.summary["C2"] = c2;
  if (l.size() >= 3) {
    FitOptions fo;
    fo.min_points = 3;
    DecayFit f = fit_decay(l, rho, DecayFamily::Linear, fo);
    out.summary["log_rho_fit"] = {{"slope", -f.beta}, {"expected_slope", std::log(sigma)}, {"r2", f.r2}};
  }
  out.truncations["J"] = J;
  out.truncations["samples"] = samples;
  out.tail_budgets["blaschke_tail"] = interp_tail_bound(sigma, eps1, J);
  return out;
}

Result gunatillake(const Params& p, const Caps& caps) {
  const double w0 = p.real("w0");
  const double r = p.real("r");
  const int N = p.integer("N");
  const int count = p.integer("count");
  require_cap("N", N, caps.N_max);
  OperatorMatrix M = build_matrix(Weight::polynomial({w0, 1.0}), SymbolSpec::affine(r, 0.0), N, Basis::Hardy);
  std::vector<cplx> ev = eigenvalues(M, static_cast<std::size_t>(count));
  Result out;
  double err = 0.0;
  for (int n = 0; n < count; ++n) {
    double predicted = std::abs(w0) * std::pow(r, n);
    double got = std::abs(ev[static_cast<std::size_t>(n)]);
    out.rows.push_back({"eigen_modulus", n, got, true, false});
    out.rows.push_back({"predicted", n, predicted, true, false});
    err = std::max(err, std::abs(got - predicted));
  }
  out.summary["max_abs_error"] = err;
  out.truncations["N"] = N;
  return out;
}

Result capacity_table(const Params& p, const Caps&) {
  std::vector<double> radii = p.reals("radii");
  CapacityValue v = tau_polydisk(radii);
  Result out;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    out.rows.push_back({"radius", static_cast<long long>(k) + 1, radii[k], true, false});
    out.rows.push_back({"green_capacity", static_cast<long long>(k) + 1, green_capacity_disk(radii[k]), true, false});
  }
  out.rows.push_back({"tau", v.m, v.tau, true, false});
  out.rows.push_back({"gamma", v.m, v.gamma, true, false});
  out.summary = {{"tau", v.tau}, {"gamma", v.gamma}, {"m", v.m}, {"radii", radii}};
  return out;
}

Result counting_lemma(const Params& p, const Caps&) {
  std::vector<double> lambda = p.reals("lambda");
  std::vector<double> A = p.reals("A");
  Result out;
  json table = json::array();
  for (std::size_t i = 0; i < A.size(); ++i) {
    LatticeCount c = count_lattice(lambda, A[i]);
    long long n = static_cast<long long>(i) + 1;
    out.rows.push_back({"A", n, A[i], true, false});
    out.rows.push_back({"count", n, static_cast<double>(c.count), true, false});
    out.rows.push_back({"asymptotic", n, c.asymptotic, true, false});
    out.rows.push_back({"ratio", n, c.ratio, true, false});
    table.push_back({{"A", A[i]}, {"count", c.count}, {"asymptotic", c.asymptotic}, {"ratio", c.ratio}});
  }
  out.summary["lambda"] = lambda;
  out.summary["table"] = table;
  return out;
}

Result beta_vs_gamma(const Params& p, const Caps& caps) {
  const std::string variant = p.text("variant");
  const int D = p.integer("D");
  Result out;
  SingularSpectrum s;
  double gamma = 0.0;
  if (variant == "diagonal") {
    require_cap("D", D, caps.D_max);
    std::vector<double> radii = p.reals("radii");
    s = direct2d_spectrum(Symbol2D::diagonal(radii), D, static_cast<std::size_t>((D + 1) * (D + 2) / 2));
    gamma = tau_polydisk(radii).gamma;
    out.summary["gamma"] = gamma;
    out.truncations["D"] = D;
  } else if (variant == "separated") {
    const int N = p.integer("N");
    require_cap("N", N, caps.N_max);
    SymbolSpec lens = SymbolSpec::lens(p.real("theta"));
    SingularSpectrum a = singular_values(build_matrix(Weight::unit(), lens, N, Basis::Auto), static_cast<std::size_t>(N));
    const double r = p.real("r");
    SingularSpectrum b = singular_values(build_matrix(Weight::unit(), SymbolSpec::affine(r, 0.0), 64, Basis::Hardy), 64);
    s = tensor_spectrum(a, b, std::min<std::size_t>(4096, a.size() * b.size()));
    out.truncations["N"] = N;
  } else {
    throw InvalidSpec("beta-vs-gamma: variant must be 'diagonal' or 'separated'");
  }
  add_spectrum(out, "a_n", s);
  BetaEstimate b = beta_estimate(s, 2);
  for (std::size_t i = 0; i < b.b.size(); ++i) out.rows.push_back({"b_n", b.n[i], b.b[i], true, false});
  out.summary["beta"] = beta_json(b);
  out.summary["spectrum"] = spectrum_info(s);
  if (variant == "diagonal") out.summary["beta_le_gamma"] = b.value <= gamma + 0.02;
  out.tail_budgets["a_n"] = s.tail_budget;
  return out;
}

}  // namespace

const std::vector<Experiment>& registry() {
  static const std::vector<Experiment> r = {
      {"diag-seminal", "a_n of C_{rz} on H^2 against r^{n-1}, with linear-rate fit", {{"r", "0.5"}, {"N", "64"}},
       diag_seminal},
      {"tensor-lemma", "Kronecker SVD against the rearranged product spectrum, and a_mn >= a_m a_n",
       {{"pairs", "20"}, {"m", "4"}, {"n", "3"}, {"seed", "1"}}, tensor_lemma},
      {"bilens-trichotomy", "HS quadrature, Bergman column norms and kernel witness for glued lens maps",
       {{"thetas", "0.4,0.5,0.6"}, {"columns", "2000"}}, bilens_trichotomy},
      {"glued-rate", "spectrum of C_Phi for Phi = (lens, lens) with sqrt(n), n and n^(1/3) fits",
       {{"theta", "0.25"}, {"N", "1024"}, {"keep", "128"}}, glued_rate},
      {"triangular-lens", "(lens(z1), c B(z1) z2): block spectrum, n^(1/3) fit and lower-bound shape",
       {{"theta", "0.5"}, {"c", "0.5"}, {"sigma", "0.5"}, {"eps1", "0.5"}, {"J", "40"}, {"N", "256"},
        {"floor", "1e-6"}, {"keep", "300"}, {"levels", "12"}},
       triangular_lens},
      {"triangular-cusp", "(cusp(z1), c B(z1) z2): block spectrum, sqrt(n/log n) fit and lower-bound shape",
       {{"c", "0.5"}, {"sigma", "0.5"}, {"eps1", "0.5"}, {"J", "40"}, {"N", "256"}, {"floor", "1e-6"},
        {"keep", "300"}, {"levels", "16"}},
       triangular_cusp},
      {"chobou", "triangular counterexample: sqrt(n) fit and beta_2 classification",
       {{"theta", "0.5"}, {"N", "512"}, {"floor", "1e-7"}, {"keep", "400"}, {"D", "0"}}, chobou},
      {"blaschke-circles", "circles where the interpolating Blaschke product stays above its floor",
       {{"sigma", "0.5"}, {"eps1", "0.5"}, {"J", "40"}, {"levels", "8"}, {"samples", "4096"}}, blaschke_circles},
      {"gunatillake", "eigenvalues of M_w C_phi against w(0) phi'(0)^n",
       {{"w0", "0.3"}, {"r", "0.5"}, {"N", "48"}, {"count", "8"}}, gunatillake},
      {"capacity-table", "tau and Gamma for a polydisk", {{"radii", "(1/e,1/e)"}}, capacity_table},
      {"counting-lemma", "lattice counts against A^m / (prod lambda m!)", {{"lambda", "1,2"}, {"A", "10,20,40,80"}},
       counting_lemma},
      {"beta-vs-gamma", "b_n = a_{n^2}^{1/n} against Gamma_2 of the image",
       {{"variant", "diagonal"}, {"radii", "(1/e,1/e)"}, {"D", "40"}, {"theta", "0.5"}, {"r", "0.3"}, {"N", "256"}},
       beta_vs_gamma},
  };
  return r;
}

}  // namespace opnum::lab
