#include "opnum/hardy1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "opnum/errors.hpp"
#include "opnum/geometry.hpp"
#include "opnum/parallel.hpp"
#include "opnum/rational.hpp"
#include "opnum/series.hpp"

namespace opnum {

// ---------------------------------------------------------------- Weight

Weight::Weight() = default;

Weight Weight::unit() { return Weight(); }

Weight Weight::constant(cplx c) {
  Weight w;
  w.kind_ = Kind::Constant;
  w.value_ = c;
  return w;
}

Weight Weight::polynomial(std::vector<cplx> coefficients) {
  if (coefficients.empty()) coefficients.push_back(0.0);
  Weight w;
  w.kind_ = Kind::Polynomial;
  w.coefficients_ = std::move(coefficients);
  return w;
}

Weight Weight::symbol(const SymbolSpec& s, int power) {
  if (power < 0) throw DomainError("Weight::symbol: negative power");
  Weight w;
  if (power == 0) return w;
  w.kind_ = Kind::SymbolPower;
  w.base_ = s;
  w.power_ = power;
  return w;
}

std::optional<int> Weight::degree() const {
  switch (kind_) {
    case Kind::Unit:
    case Kind::Constant: return 0;
    case Kind::Polynomial: return static_cast<int>(coefficients_.size()) - 1;
    case Kind::SymbolPower: {
      auto d = polynomial_degree(base_);
      if (!d) return std::nullopt;
      return *d * power_;
    }
  }
  return std::nullopt;
}

cplx Weight::operator()(cplx z) const {
  switch (kind_) {
    case Kind::Unit: return 1.0;
    case Kind::Constant: return value_;
    case Kind::Polynomial: {
      cplx acc = 0.0;
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
      return acc;
    }
    case Kind::SymbolPower: return std::pow(eval(base_, z), power_);
  }
  return 1.0;
}

cplx Weight::at(const DiskPoint& z) const {
  if (kind_ == Kind::SymbolPower) {
    cplx b = base_.at(z).v;
    cplx acc = 1.0;
    for (int k = 0; k < power_; ++k) acc *= b;
    return acc;
  }
  return (*this)(z.v);
}

std::string Weight::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Unit: os << "1"; break;
    case Kind::Constant: os << value_; break;
    case Kind::Polynomial: {
      os << "poly(";
      for (std::size_t k = 0; k < coefficients_.size(); ++k) os << (k ? "," : "") << coefficients_[k];
      os << ")";
      break;
    }
    case Kind::SymbolPower: os << "(" << base_.describe() << ")^" << power_; break;
  }
  return os.str();
}

namespace {

nlohmann::json complex_json(cplx c) {
  if (c.imag() == 0.0) return c.real();
  return nlohmann::json::array({c.real(), c.imag()});
}

}  // namespace

std::string Weight::to_json() const {
  nlohmann::json j;
  switch (kind_) {
    case Kind::Unit: j = {{"kind", "unit"}}; break;
    case Kind::Constant: j = {{"kind", "constant"}, {"c", complex_json(value_)}}; break;
    case Kind::Polynomial: {
      j = {{"kind", "polynomial"}};
      nlohmann::json arr = nlohmann::json::array();
      for (cplx c : coefficients_) arr.push_back(complex_json(c));
      j["coefficients"] = arr;
      break;
    }
    case Kind::SymbolPower:
      j = {{"kind", "symbol_power"}, {"power", power_}, {"symbol", nlohmann::json::parse(opnum::to_json(base_))}};
      break;
  }
  return j.dump();
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Hardy: return "hardy";
    case Basis::Bergman: return "bergman";
    case Basis::Rational: return "rational";
    case Basis::Auto: return "auto";
  }
  return "unknown";
}

// ---------------------------------------------------------------- matrices

std::vector<double> image_norms_squared(const Weight& w, const SymbolSpec& phi, int count, int nodes, int grading) {
  BoundaryGrid g = graded_grid(nodes, grading);
  std::vector<long double> acc(count, 0.0L);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double wt = g.w[i] * std::norm(w.at(g.z[i]));
    double m2 = std::norm(phi.at(g.z[i]).v);
    double p = 1.0;
    for (int n = 0; n < count; ++n) {
      acc[n] += static_cast<long double>(wt * p);
      p *= m2;
      if (p == 0.0) break;
    }
  }
  return std::vector<double>(acc.begin(), acc.end());
}

namespace {

bool touches_circle(const SymbolSpec& phi, const BuildOptions& opt) {
  if (polynomial_degree(phi)) return boundary_sup(phi, 4096) > 1.0 - 1e-12;
  return boundary_sup(phi, 8192) > opt.contact_threshold;
}

OperatorMatrix build_monomial(const Weight& w, const SymbolSpec& phi, int N, bool bergman, const BuildOptions& opt) {
  OperatorMatrix out;
  out.domain = bergman ? Basis::Bergman : Basis::Hardy;
  out.codomain = Codomain::Hardy;
  out.truncation = N;
  out.weight = w;
  out.phi = phi;
  const int D = N - 1;
  const double rho = default_radius(D);
  const int m = taylor_samples(D, rho);
  out.nodes = m;
  std::vector<cplx> ph(m), wt(m);
  for (int k = 0; k < m; ++k) {
    cplx z = std::polar(rho, 2.0 * std::numbers::pi * k / m);
    ph[k] = eval(phi, z);
    wt[k] = w(z);
  }
  out.matrix.resize(N, N);
  constexpr int kBatch = 32;
  std::vector<cplx> cur = wt;
  for (int n0 = 0; n0 < N; n0 += kBatch) {
    int n1 = std::min(N, n0 + kBatch);
    std::vector<std::vector<cplx>> batch;
    batch.reserve(n1 - n0);
    for (int n = n0; n < n1; ++n) {
      batch.push_back(cur);
      for (int k = 0; k < m; ++k) cur[k] *= ph[k];
    }
    std::vector<std::vector<cplx>> coef(batch.size());
    parallel_for(batch.size(), [&](std::size_t b) { coef[b] = coefficients_from_samples({batch[b]}, D, rho)[0]; });
    for (int n = n0; n < n1; ++n) {
      double s = bergman ? std::sqrt(n + 1.0) : 1.0;
      for (int r = 0; r < N; ++r) out.matrix(r, n) = s * coef[n - n0][r];
    }
  }
  std::vector<double> img = image_norms_squared(w, phi, N, opt.norm_nodes, 16);
  out.column_tail.resize(N);
  double frob = 0.0;
  for (int n = 0; n < N; ++n) {
    double s2 = bergman ? (n + 1.0) : 1.0;
    double c2 = out.matrix.col(n).squaredNorm();
    double t = std::sqrt(std::max(0.0, s2 * img[n] - c2));
    out.column_tail[n] = t;
    frob += t * t;
  }
  out.tail_budget = std::sqrt(frob);
  return out;
}

OperatorMatrix build_rational(const Weight& w, const SymbolSpec& phi, int N, const BuildOptions& opt) {
  OperatorMatrix out;
  out.domain = Basis::Rational;
  out.codomain = Codomain::ImageFrame;
  out.weight = w;
  out.phi = phi;
  int m = opt.nodes > 0 ? opt.nodes : std::max(16384, 32 * N);
  m = (m + 3) / 4 * 4;
  out.nodes = m;

  auto samples = [&](int nodes, std::vector<DiskPoint>& x, std::vector<cplx>& c) {
    BoundaryGrid g = graded_grid(nodes, opt.grading);
    x.resize(g.size());
    c.resize(g.size());
    parallel_for(g.size(), [&](std::size_t i) {
      x[i] = phi.at(g.z[i]);
      c[i] = std::sqrt(g.w[i]) * w.at(g.z[i]);
      if (!std::isfinite(c[i].real()) || !std::isfinite(c[i].imag())) c[i] = 0.0;
    });
  };
  std::vector<DiskPoint> x;
  std::vector<cplx> c;
  samples(m, x, c);

  std::vector<DiskPoint> poles = blaschke_pivots(x, c, N, opt.pole_gap);
  const int n = static_cast<int>(poles.size());
  out.truncation = n;
  for (const auto& p : poles) out.poles.push_back(p.v);
  if (n == 0) {
    out.matrix.resize(0, 0);
    return out;
  }

  Eigen::MatrixXcd A = mt_basis(x, poles);
  for (Eigen::Index i = 0; i < A.rows(); ++i) A.row(i) *= c[static_cast<std::size_t>(i)];
  const double frob_fine = A.squaredNorm();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
  out.matrix = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();

  // quadrature audit on a grid with half the nodes
  std::vector<DiskPoint> xh;
  std::vector<cplx> ch;
  samples(std::max(4, m / 2 / 4 * 4), xh, ch);
  Eigen::MatrixXcd Ah = mt_basis(xh, poles);
  double frob_half = 0.0;
  for (Eigen::Index i = 0; i < Ah.rows(); ++i) frob_half += std::norm(ch[static_cast<std::size_t>(i)]) * Ah.row(i).squaredNorm();
  out.tail_budget = std::sqrt(std::abs(frob_fine - frob_half));
  out.column_tail.assign(n, 0.0);
  return out;
}

}  // namespace

OperatorMatrix build_matrix(const Weight& w, const SymbolSpec& phi, int N, Basis domain, const BuildOptions& opt) {
  if (N < 1) throw DomainError("build_matrix: truncation must be positive");
  if (N > opt.max_truncation) throw BudgetError("build_matrix: truncation exceeds the configured maximum");
  if (domain == Basis::Auto) {
    bool poly = polynomial_degree(phi).has_value() && w.degree().has_value();
    domain = (!poly && touches_circle(phi, opt)) ? Basis::Rational : Basis::Hardy;
  }
  switch (domain) {
    case Basis::Hardy: return build_monomial(w, phi, N, false, opt);
    case Basis::Bergman: return build_monomial(w, phi, N, true, opt);
    case Basis::Rational: return build_rational(w, phi, N, opt);
    case Basis::Auto: break;
  }
  throw DomainError("build_matrix: unknown basis");
}

double column_square_sum(const OperatorMatrix& M) { return M.matrix.squaredNorm(); }

// ---------------------------------------------------------------- spectra

std::size_t SingularSpectrum::stable_prefix() const {
  std::size_t k = 0;
  while (k < stabilized.size() && stabilized[k]) ++k;
  return k;
}

std::vector<double> SingularSpectrum::stabilized_values() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (stabilized[i]) out.push_back(values[i]);
  return out;
}

namespace {

std::vector<double> svd_values(const Eigen::MatrixXcd& A) {
  if (A.size() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
  if (svd.info() != Eigen::Success) throw DecompositionError("singular value decomposition did not converge");
  Eigen::VectorXd s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

SingularSpectrum compare_spectra(const std::vector<double>& fine, const std::vector<double>& coarse, std::size_t n_keep,
                                 double tol) {
  SingularSpectrum s;
  s.stabilization_tol = tol;
  const std::size_t n = std::min(n_keep, fine.size());
  s.values.assign(fine.begin(), fine.begin() + static_cast<std::ptrdiff_t>(n));
  s.stabilized.resize(n);
  s.rel_change.resize(n);
  const double floor = fine.empty() ? 0.0 : fine.front() * 1e-13;
  for (std::size_t i = 0; i < n; ++i) {
    double rc = std::numeric_limits<double>::infinity();
    if (i < coarse.size() && fine[i] > 0.0) rc = std::abs(fine[i] - coarse[i]) / fine[i];
    s.rel_change[i] = rc;
    s.stabilized[i] = rc < tol && fine[i] > floor;
  }
  double cert = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (s.stabilized[i]) cert = std::max(cert, s.rel_change[i]);
  s.certificate = cert;
  return s;
}

SingularSpectrum singular_values(const OperatorMatrix& M, std::size_t n_keep, double tol) {
  const Eigen::Index n = M.matrix.cols();
  if (static_cast<Eigen::Index>(n_keep) > n) n_keep = static_cast<std::size_t>(n);
  std::vector<double> fine = svd_values(M.matrix);
  const Eigen::Index h = n / 2;
  std::vector<double> coarse = h > 0 ? svd_values(M.matrix.topLeftCorner(h, h)) : std::vector<double>{};
  SingularSpectrum s = compare_spectra(fine, coarse, n_keep, tol);
  s.truncation = M.truncation;
  s.tail_budget = M.tail_budget;
  return s;
}

std::vector<cplx> eigenvalues(const OperatorMatrix& M, std::size_t n_keep) {
  if (M.matrix.rows() != M.matrix.cols()) throw DomainError("eigenvalues: matrix must be square");
  if (M.domain != Basis::Hardy && M.domain != Basis::Bergman)
    throw DomainError("eigenvalues: need a matrix in a monomial basis");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M.matrix, false);
  if (es.info() != Eigen::Success) throw DecompositionError("eigenvalue decomposition did not converge");
  Eigen::VectorXcd ev = es.eigenvalues();
  std::vector<cplx> out(ev.data(), ev.data() + ev.size());
  std::stable_sort(out.begin(), out.end(), [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
  if (out.size() > n_keep) out.resize(n_keep);
  return out;
}

// ---------------------------------------------------------------- norms and bounds

HsNorm hs_norm(const Weight& w, const SymbolSpec& phi, int power, const QuadratureOptions& opt) {
  if (power != 1 && power != 2) throw DomainError("hs_norm: power must be 1 or 2");
  auto f = [&](const DiskPoint& z) {
    DiskPoint p = phi.at(z);
    double d = power == 1 ? p.d : p.d * p.d;
    double num = std::norm(w.at(z));
    if (num == 0.0) return 0.0;
    if (!(d > 0.0)) return std::numeric_limits<double>::infinity();
    return num / d;
  };
  HsNorm out;
  out.report = boundary_integral(f, opt);
  out.divergent = !out.report.converged;
  out.value = out.divergent ? std::numeric_limits<double>::infinity() : std::sqrt(out.report.value);
  return out;
}

double operator_norm_bound(cplx phi0) {
  double r = std::abs(phi0);
  if (!(r < 1.0)) throw DomainError("operator_norm_bound: |phi(0)| must be < 1");
  return std::sqrt((1.0 + r) / (1.0 - r));
}

double special_rate(double C) {
  if (!(C > 0.0)) throw DomainError("special_rate: C must be positive");
  return std::log(std::sqrt(16.0 * C * C + 1.0) / (4.0 * C));
}

double bound_special(int n, int m, double theta, double R, double C) {
  if (n < 0 || m < 0 || !(theta > 0.0) || !(R > 0.0)) throw DomainError("bound_special: arguments must be positive");
  double a = special_rate(C);
  double second = std::isinf(R) ? 0.0 : std::exp(-R * std::pow(2.0, m * theta));
  return std::max(std::exp(-a * n), second);
}

double widom_lower_form(double r, double delta, double gamma, int n) {
  if (!(r >= 0.0 && r < 1.0) || !(delta > 0.0 && delta <= 1.0) || !(gamma > 0.0 && gamma < 1.0) || n < 0)
    throw DomainError("widom_lower_form: argument out of range");
  return std::sqrt(1.0 - r) * delta * std::pow(gamma, n);
}

}  // namespace opnum
