#include "opnum/bidisk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include <json.hpp>

#include "opnum/errors.hpp"
#include "opnum/geometry.hpp"
#include "opnum/parallel.hpp"
#include "opnum/quadrature.hpp"
#include "opnum/rational.hpp"
#include "json_detail.hpp"

namespace opnum {

using nlohmann::json;

// ---------------------------------------------------------------- Symbol2D

namespace {

void require_inner_h(const SymbolSpec& h) {
  if (h.kind() == SymbolKind::Power) {
    if (h.exponent() < 1) throw InvalidSpec("triangular: h = z^q needs q >= 1");
    return;
  }
  if (h.kind() == SymbolKind::BlaschkeFinite) {
    for (cplx a : h.zeros())
      if (std::abs(a) < 1e-15) return;
    throw InvalidSpec("triangular: finite Blaschke h must vanish at 0");
  }
  throw InvalidSpec("triangular: h must be z^q or a finite Blaschke product");
}

}  // namespace

Symbol2D Symbol2D::separated(const SymbolSpec& phi, const SymbolSpec& psi) {
  Symbol2D s;
  s.variant_ = Variant::Separated;
  s.phi_ = phi;
  s.psi_ = psi;
  return s;
}

Symbol2D Symbol2D::glued(const SymbolSpec& phi) {
  Symbol2D s;
  s.variant_ = Variant::Glued;
  s.phi_ = phi;
  return s;
}

Symbol2D Symbol2D::triangular(const SymbolSpec& phi, const SymbolSpec& psi, const SymbolSpec& h) {
  require_inner_h(h);
  Symbol2D s;
  s.variant_ = Variant::Triangular;
  s.phi_ = phi;
  s.psi_ = psi;
  s.h_ = h;
  return s;
}

Symbol2D Symbol2D::diagonal(std::vector<double> radii) {
  if (radii.empty()) throw InvalidSpec("diagonal: need at least one radius");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0)) throw InvalidSpec("diagonal: radii must lie in (0,1)");
  Symbol2D s;
  s.variant_ = Variant::Diagonal;
  s.radii_ = std::move(radii);
  return s;
}

int Symbol2D::dimension() const { return variant_ == Variant::Diagonal ? static_cast<int>(radii_.size()) : 2; }

std::pair<cplx, cplx> Symbol2D::operator()(cplx z1, cplx z2) const {
  switch (variant_) {
    case Variant::Separated: return {eval(phi_, z1), eval(psi_, z2)};
    case Variant::Glued: {
      cplx p = eval(phi_, z1);
      return {p, p};
    }
    case Variant::Triangular: return {eval(phi_, z1), eval(psi_, z1) * eval(h_, z2)};
    case Variant::Diagonal:
      if (radii_.size() != 2) throw DomainError("Symbol2D: pointwise evaluation needs dimension 2");
      return {radii_[0] * z1, radii_[1] * z2};
  }
  return {0.0, 0.0};
}

std::string Symbol2D::to_json() const {
  json j;
  switch (variant_) {
    case Variant::Separated:
      j = {{"variant", "separated"}, {"phi", detail::symbol_to_json(phi_)}, {"psi", detail::symbol_to_json(psi_)}};
      break;
    case Variant::Glued: j = {{"variant", "glued"}, {"phi", detail::symbol_to_json(phi_)}}; break;
    case Variant::Triangular:
      j = {{"variant", "triangular"},
           {"phi", detail::symbol_to_json(phi_)},
           {"psi", detail::symbol_to_json(psi_)},
           {"h", detail::symbol_to_json(h_)}};
      break;
    case Variant::Diagonal: j = {{"variant", "diagonal"}, {"radii", radii_}}; break;
  }
  return j.dump();
}

Symbol2D Symbol2D::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("Symbol2D: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("variant")) throw InvalidSpec("Symbol2D: missing 'variant'");
  const std::string v = j.at("variant").get<std::string>();
  auto allow = [&](std::initializer_list<const char*> keys) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "variant") continue;
      bool ok = false;
      for (const char* k : keys) ok = ok || it.key() == k;
      if (!ok) throw InvalidSpec("Symbol2D: unknown field '" + it.key() + "'");
    }
  };
  auto sym = [&](const char* key) {
    if (!j.contains(key)) throw InvalidSpec(std::string("Symbol2D: missing field '") + key + "'");
    return detail::symbol_from_json(j.at(key));
  };
  if (v == "separated") {
    allow({"phi", "psi"});
    return separated(sym("phi"), sym("psi"));
  }
  if (v == "glued") {
    allow({"phi"});
    return glued(sym("phi"));
  }
  if (v == "triangular") {
    allow({"phi", "psi", "h"});
    return triangular(sym("phi"), sym("psi"), sym("h"));
  }
  if (v == "diagonal") {
    allow({"radii"});
    if (!j.contains("radii")) throw InvalidSpec("Symbol2D: missing field 'radii'");
    return diagonal(j.at("radii").get<std::vector<double>>());
  }
  throw InvalidSpec("Symbol2D: unknown variant '" + v + "'");
}

Symbol2D chobou_symbol(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("chobou_symbol: theta must lie in (0,1)");
  SymbolSpec phi = SymbolSpec::compose(SymbolSpec::lens(theta), SymbolSpec::halfshift());
  SymbolSpec psi = SymbolSpec::compose(phi, SymbolSpec::outer_weight(theta));
  return Symbol2D::triangular(phi, psi, SymbolSpec::power(1));
}

// ---------------------------------------------------------------- tensor

SingularSpectrum tensor_spectrum(const SingularSpectrum& S, const SingularSpectrum& T, std::size_t count) {
  const std::size_t ns = S.size();
  const std::size_t nt = T.size();
  if (count > ns * nt) throw BudgetError("tensor_spectrum: count exceeds the available products");
  using Item = std::tuple<double, std::size_t, std::size_t>;
  auto cmp = [](const Item& a, const Item& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) > std::get<1>(b);
    return std::get<2>(a) > std::get<2>(b);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  SingularSpectrum out;
  if (count == 0) return out;
  heap.emplace(S.values[0] * T.values[0], 0, 0);
  out.values.reserve(count);
  while (out.values.size() < count) {
    auto [v, i, j] = heap.top();
    heap.pop();
    out.values.push_back(v);
    out.stabilized.push_back(S.stabilized[i] && T.stabilized[j]);
    double rc = std::max(S.rel_change.empty() ? 0.0 : S.rel_change[i], T.rel_change.empty() ? 0.0 : T.rel_change[j]);
    out.rel_change.push_back(rc);
    if (j + 1 < nt) heap.emplace(S.values[i] * T.values[j + 1], i, j + 1);
    if (j == 0 && i + 1 < ns) heap.emplace(S.values[i + 1] * T.values[0], i + 1, 0);
  }
  // below this level some products of the untruncated spectra are missing
  auto trusted = [](const SingularSpectrum& X) {
    std::size_t p = X.stable_prefix();
    return p ? X.values[p - 1] : X.values.back();
  };
  const double complete = std::max(trusted(S) * T.values[0], trusted(T) * S.values[0]);
  for (std::size_t k = 0; k < out.values.size(); ++k)
    if (out.values[k] < complete) out.stabilized[k] = false;
  out.truncation = S.truncation * T.truncation;
  double cert = 0.0;
  for (std::size_t k = 0; k < out.values.size(); ++k)
    if (out.stabilized[k]) cert = std::max(cert, out.rel_change[k]);
  out.certificate = cert;
  double s1 = S.values.empty() ? 0.0 : S.values[0];
  double t1 = T.values.empty() ? 0.0 : T.values[0];
  out.tail_budget = S.tail_budget * t1 + T.tail_budget * s1 + S.tail_budget * T.tail_budget;
  out.stabilization_tol = std::max(S.stabilization_tol, T.stabilization_tol);
  return out;
}

// ---------------------------------------------------------------- kernels

double kernel_norm(cplx a, cplx b) {
  if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0)) throw DomainError("kernel_norm: points must lie in the disk");
  return 1.0 / std::sqrt((1.0 - std::norm(a)) * (1.0 - std::norm(b)));
}

KernelWitness glued_kernel_witness(const SymbolSpec& phi, int levels, double slope_threshold) {
  KernelWitness w;
  std::vector<double> xs, ys;
  for (int j = 1; j <= levels; ++j) {
    double e = std::ldexp(1.0, -j);
    DiskPoint z;
    z.v = 1.0 - e;
    z.om = e;
    z.op = 2.0 - e;
    z.d = e * (2.0 - e);
    DiskPoint p = phi.at(z);
    if (!(p.d > 0.0)) break;
    double r = std::sqrt(z.d) / p.d;
    w.a.push_back(z.v.real());
    w.ratio.push_back(r);
    xs.push_back(j * std::log(2.0));
    ys.push_back(std::log(r));
  }
  // slope over the second half, where the boundary behaviour dominates
  std::size_t lo = xs.size() / 2;
  std::size_t n = xs.size() - lo;
  if (n >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = lo; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = lo; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    w.slope = sxx > 0 ? sxy / sxx : 0.0;
  }
  w.unbounded = w.slope > slope_threshold;
  return w;
}

// ---------------------------------------------------------------- glued

namespace {

std::vector<double> svd_of(const Eigen::MatrixXcd& A) {
  if (A.size() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
  if (svd.info() != Eigen::Success) throw DecompositionError("singular value decomposition did not converge");
  Eigen::VectorXd s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

SingularSpectrum glued_spectrum(const SymbolSpec& phi, int N, std::size_t n_keep, const GluedOptions& opt) {
  if (N < 2) throw DomainError("glued_spectrum: truncation must be at least 2");
  KernelWitness kw = glued_kernel_witness(phi);
  if (kw.unbounded) throw UnboundedOperator("glued_spectrum: kernel ratio grows, C_Phi is unbounded");

  if (boundary_sup(phi, 8192) <= 0.999) {
    OperatorMatrix M = build_matrix(Weight::unit(), phi, N, Basis::Bergman);
    return singular_values(M, n_keep);
  }

  const int nb = opt.poles > 0 ? opt.poles : std::max(8, N / 16);
  BoundaryGrid g = graded_grid(opt.nodes, opt.grading);
  const std::size_t m = g.size();
  std::vector<DiskPoint> x(m);
  std::vector<cplx> c(m);
  parallel_for(m, [&](std::size_t i) {
    x[i] = phi.at(g.z[i]);
    c[i] = std::sqrt(g.w[i]);
  });
  KernelPivots piv = kernel_pivots(x, c, 2, nb);
  std::vector<DiskPoint> poles, doubled;
  for (int i : piv.index) {
    DiskPoint p = clip_pole(x[i], opt.pole_gap);
    poles.push_back(p);
    doubled.push_back(p);
    doubled.push_back(p);
  }
  const int n = static_cast<int>(poles.size());
  Eigen::MatrixXcd B = mt_basis(x, poles);
  Eigen::MatrixXcd F = mt_basis(x, doubled);
  Eigen::VectorXcd cw(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) cw(static_cast<Eigen::Index>(i)) = c[i];
  F = cw.asDiagonal() * F;
  StreamingFrame frame(F, opt.frame_tol);

  std::vector<Eigen::VectorXcd> cols;
  std::vector<int> top;  // max(j, k) for each column
  double dropped = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j <= k; ++j) {
      Eigen::VectorXcd v = cw.cwiseProduct(B.col(j)).cwiseProduct(B.col(k));
      if (j < k) v *= std::sqrt(2.0);
      cols.push_back(frame.project(v));
      top.push_back(k);
      dropped += frame.last_residual() * frame.last_residual();
    }
  }
  const Eigen::Index rows = frame.rank();
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(rows, static_cast<Eigen::Index>(cols.size()));
  Eigen::Index coarse_cols = 0;
  for (std::size_t q = 0; q < cols.size(); ++q) {
    P.col(static_cast<Eigen::Index>(q)).head(cols[q].size()) = cols[q];
    if (top[q] < n / 2) ++coarse_cols;
  }
  // columns are ordered by k, so the coarse set is a prefix
  std::vector<double> fine = svd_of(P);
  std::vector<double> coarse = svd_of(P.leftCols(coarse_cols));
  SingularSpectrum s = compare_spectra(fine, coarse, n_keep);
  s.truncation = n;
  s.tail_budget = std::sqrt(dropped);
  return s;
}

// ---------------------------------------------------------------- triangular

SingularSpectrum merge_blocks(const std::vector<SingularSpectrum>& blocks, std::size_t n_keep) {
  using Item = std::tuple<double, int, std::size_t>;
  auto cmp = [](const Item& a, const Item& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) > std::get<1>(b);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (!blocks[k].values.empty()) heap.emplace(blocks[k].values[0], static_cast<int>(k), 0);
  SingularSpectrum out;
  while (!heap.empty() && out.values.size() < n_keep) {
    auto [v, k, i] = heap.top();
    heap.pop();
    const SingularSpectrum& b = blocks[static_cast<std::size_t>(k)];
    out.values.push_back(v);
    out.stabilized.push_back(b.stabilized[i]);
    out.rel_change.push_back(b.rel_change.empty() ? 0.0 : b.rel_change[i]);
    out.block.push_back(k);
    if (i + 1 < b.values.size()) heap.emplace(b.values[i + 1], k, i + 1);
  }
  double cert = 0.0, budget = 0.0;
  for (std::size_t q = 0; q < out.values.size(); ++q)
    if (out.stabilized[q]) cert = std::max(cert, out.rel_change[q]);
  for (const auto& b : blocks) {
    budget += b.tail_budget;
    out.truncation += b.truncation;
  }
  out.certificate = cert;
  out.tail_budget = budget;
  if (!blocks.empty()) out.stabilization_tol = blocks.front().stabilization_tol;
  return out;
}

TriangularModel triangular_model(const SymbolSpec& phi, const SymbolSpec& psi, int N, std::size_t n_keep,
                                 const TriangularOptions& opt) {
  TriangularModel model;
  model.rho = boundary_sup(psi, 16384);
  if (!(model.rho < 1.0)) throw DomainError("triangular: sup |psi| must be < 1");
  int K = opt.blocks;
  if (K < 0) {
    if (model.rho == 0.0) {
      K = 0;
    } else {
      if (!(opt.floor > 0.0 && opt.floor < 2.0)) throw DomainError("triangular: floor must lie in (0,2)");
      K = std::max(0, static_cast<int>(std::ceil(std::log(opt.floor / 2.0) / std::log(model.rho))));
    }
  }
  model.K = K;
  model.ceiling = 2.0 * std::pow(model.rho, K + 1);
  model.blocks.resize(static_cast<std::size_t>(K) + 1);
  model.block_norm.resize(static_cast<std::size_t>(K) + 1);

  parallel_for(static_cast<std::size_t>(K) + 1, [&](std::size_t k) {
    Weight wk = Weight::symbol(psi, static_cast<int>(k));
    int nk = opt.adaptive ? std::min(N, opt.initial_truncation) : N;
    SingularSpectrum s;
    for (;;) {
      OperatorMatrix M = build_matrix(wk, phi, nk, Basis::Auto, opt.build);
      s = singular_values(M, static_cast<std::size_t>(M.matrix.cols()), opt.stabilization_tol);
      if (!opt.adaptive || nk >= N) break;
      bool settled = !s.values.empty() && s.values.back() < opt.floor;
      for (std::size_t i = 0; settled && i < s.values.size() && s.values[i] >= opt.floor; ++i)
        settled = s.stabilized[i];
      if (settled) break;
      nk = std::min(N, 2 * nk);
    }
    model.block_norm[k] = s.values.empty() ? 0.0 : s.values.front();
    model.blocks[k] = std::move(s);
  });

  model.merged = merge_blocks(model.blocks, n_keep);
  model.merged.discarded_ceiling = model.ceiling;
  model.merged.tail_budget += model.ceiling;
  for (std::size_t q = 0; q < model.merged.values.size(); ++q)
    if (model.merged.values[q] <= model.ceiling) model.merged.stabilized[q] = false;
  return model;
}

SingularSpectrum triangular_spectrum(const SymbolSpec& phi, const SymbolSpec& psi, int K, int N, std::size_t n_keep,
                                     const TriangularOptions& opt) {
  TriangularOptions o = opt;
  o.blocks = K;
  return triangular_model(phi, psi, N, n_keep, o).merged;
}

// ---------------------------------------------------------------- direct 2-D

namespace {

struct Axis {
  bool rational = false;
  std::vector<DiskPoint> poles;
  int size = 0;
};

Eigen::MatrixXcd eval_axis(const Axis& ax, const std::vector<DiskPoint>& x) {
  if (ax.rational) return mt_basis(x, ax.poles);
  Eigen::MatrixXcd E(static_cast<Eigen::Index>(x.size()), ax.size);
  for (std::size_t i = 0; i < x.size(); ++i) {
    cplx p = 1.0;
    for (int j = 0; j < ax.size; ++j) {
      E(static_cast<Eigen::Index>(i), j) = p;
      p *= x[i].v;
    }
  }
  return E;
}

Axis rational_axis(const std::vector<DiskPoint>& x, const BoundaryGrid& g, int power, int count, double gap) {
  std::vector<cplx> c(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) c[i] = std::sqrt(g.w[i]);
  Axis ax;
  ax.rational = true;
  if (power == 1) {
    ax.poles = blaschke_pivots(x, c, count, gap);
  } else {
    KernelPivots piv = kernel_pivots(x, c, power, count);
    for (int i : piv.index) ax.poles.push_back(clip_pole(x[i], gap));
  }
  ax.size = static_cast<int>(ax.poles.size());
  return ax;
}

Axis monomial_axis(int count) {
  Axis ax;
  ax.size = count;
  return ax;
}

bool has_contact(const SymbolSpec& s, double threshold) {
  if (polynomial_degree(s)) return false;
  return boundary_sup(s, 8192) > threshold;
}

// Streams rows into an upper-trapezoidal factor R with R^* R = A^* A.
class RowQR {
 public:
  explicit RowQR(Eigen::Index cols) : cols_(cols), buf_(0, cols) {}

  void add(const Eigen::MatrixXcd& rows) {
    pending_.push_back(rows);
    pending_rows_ += rows.rows();
    if (pending_rows_ >= 4 * cols_) flush();
  }

  Eigen::MatrixXcd finish() {
    flush();
    return buf_;
  }

 private:
  void flush() {
    if (pending_.empty()) return;
    Eigen::MatrixXcd stack(buf_.rows() + pending_rows_, cols_);
    stack.topRows(buf_.rows()) = buf_;
    Eigen::Index at = buf_.rows();
    for (const auto& p : pending_) {
      stack.middleRows(at, p.rows()) = p;
      at += p.rows();
    }
    pending_.clear();
    pending_rows_ = 0;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(stack);
    Eigen::Index r = std::min(stack.rows(), cols_);
    buf_ = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
  }

  Eigen::Index cols_;
  Eigen::MatrixXcd buf_;
  std::vector<Eigen::MatrixXcd> pending_;
  Eigen::Index pending_rows_ = 0;
};

}  // namespace

SingularSpectrum direct2d_spectrum(const Symbol2D& Phi, int degree, std::size_t n_keep, const Direct2DOptions& opt) {
  if (degree < 1) throw DomainError("direct2d_spectrum: degree must be positive");
  if (degree > opt.max_degree) throw BudgetError("direct2d_spectrum: degree exceeds the memory cap");
  const int D = degree;
  const double thr = opt.contact_threshold;
  BoundaryGrid g1, g2;
  Axis ax1, ax2;
  // first-variable images, and how to get second-variable images at node l
  std::vector<DiskPoint> x1;
  std::function<void(std::size_t, std::vector<DiskPoint>&)> second;
  bool second_const = false;  // second image independent of the first node

  switch (Phi.variant()) {
    case Symbol2D::Variant::Diagonal: {
      if (Phi.dimension() != 2) throw DomainError("direct2d_spectrum: diagonal symbol must have dimension 2");
      const double r1 = Phi.radii()[0], r2 = Phi.radii()[1];
      g1 = uniform_grid(D + 1);
      g2 = uniform_grid(D + 1);
      for (const auto& z : g1.z) x1.push_back(DiskPoint::from(r1 * z.v));
      ax1 = monomial_axis(D + 1);
      ax2 = monomial_axis(D + 1);
      second_const = true;
      second = [&, r2](std::size_t l, std::vector<DiskPoint>& out) { out.assign(1, DiskPoint::from(r2 * g2.z[l].v)); };
      break;
    }
    case Symbol2D::Variant::Separated: {
      const SymbolSpec& phi = Phi.phi();
      const SymbolSpec& psi = Phi.psi();
      auto pd = polynomial_degree(phi);
      auto qd = polynomial_degree(psi);
      g1 = pd ? uniform_grid(std::max(1, *pd) * D + 1) : graded_grid(opt.graded_nodes, opt.grading);
      g2 = qd ? uniform_grid(std::max(1, *qd) * D + 1) : graded_grid(opt.second_graded_nodes, opt.grading);
      for (const auto& z : g1.z) x1.push_back(phi.at(z));
      ax1 = has_contact(phi, thr) ? rational_axis(x1, g1, 1, D + 1, opt.pole_gap) : monomial_axis(D + 1);
      std::vector<DiskPoint> x2;
      for (const auto& z : g2.z) x2.push_back(psi.at(z));
      ax2 = has_contact(psi, thr) ? rational_axis(x2, g2, 1, D + 1, opt.pole_gap) : monomial_axis(D + 1);
      second_const = true;
      second = [x2](std::size_t l, std::vector<DiskPoint>& out) { out.assign(1, x2[l]); };
      break;
    }
    case Symbol2D::Variant::Glued: {
      const SymbolSpec& phi = Phi.phi();
      auto pd = polynomial_degree(phi);
      g1 = pd ? uniform_grid(std::max(1, *pd) * 2 * D + 1) : graded_grid(opt.graded_nodes, opt.grading);
      g2 = uniform_grid(1);
      for (const auto& z : g1.z) x1.push_back(phi.at(z));
      ax1 = has_contact(phi, thr) ? rational_axis(x1, g1, 2, D + 1, opt.pole_gap) : monomial_axis(D + 1);
      ax2 = ax1;
      second = [&](std::size_t, std::vector<DiskPoint>& out) { out = x1; };
      break;
    }
    case Symbol2D::Variant::Triangular: {
      const SymbolSpec& phi = Phi.phi();
      const SymbolSpec& psi = Phi.psi();
      const SymbolSpec& h = Phi.h();
      if (!(boundary_sup(psi, 8192) < 1.0)) throw DomainError("direct2d_spectrum: sup |psi| must be < 1");
      auto pd = polynomial_degree(phi);
      auto qd = polynomial_degree(psi);
      auto hd = polynomial_degree(h);
      if (pd && qd)
        g1 = uniform_grid((std::max(1, *pd) + std::max(1, *qd)) * D + 1);
      else
        g1 = graded_grid(opt.graded_nodes, opt.grading);
      g2 = hd ? uniform_grid(std::max(1, *hd) * D + 1) : uniform_grid(opt.second_graded_nodes);
      for (const auto& z : g1.z) x1.push_back(phi.at(z));
      std::vector<DiskPoint> ps;
      for (const auto& z : g1.z) ps.push_back(psi.at(z));
      ax1 = has_contact(phi, thr) ? rational_axis(x1, g1, 1, D + 1, opt.pole_gap) : monomial_axis(D + 1);
      ax2 = monomial_axis(D + 1);
      second = [&, ps, h](std::size_t l, std::vector<DiskPoint>& out) {
        DiskPoint hz = h.at(g2.z[l]);
        out.resize(ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) out[i] = multiply(ps[i], hz);
      };
      break;
    }
  }

  std::vector<std::pair<int, int>> idx;
  for (int t = 0; t <= D; ++t)
    for (int j = 0; j <= t; ++j)
      if (j < ax1.size && t - j < ax2.size) idx.emplace_back(j, t - j);
  const auto ncols = static_cast<Eigen::Index>(idx.size());

  Eigen::MatrixXcd E1 = eval_axis(ax1, x1);
  RowQR acc(ncols);
  std::vector<DiskPoint> x2;
  const auto m1 = static_cast<Eigen::Index>(x1.size());
  for (std::size_t l = 0; l < g2.size(); ++l) {
    second(l, x2);
    Eigen::MatrixXcd E2 = eval_axis(ax2, x2);
    Eigen::MatrixXcd A(m1, ncols);
    for (Eigen::Index i = 0; i < m1; ++i) {
      double sw = std::sqrt(g1.w[static_cast<std::size_t>(i)] * g2.w[l]);
      Eigen::Index r2 = second_const ? 0 : i;
      for (Eigen::Index q = 0; q < ncols; ++q) A(i, q) = sw * E1(i, idx[q].first) * E2(r2, idx[q].second);
    }
    acc.add(A);
  }
  Eigen::MatrixXcd R = acc.finish();

  std::vector<Eigen::Index> sub;
  for (Eigen::Index q = 0; q < ncols; ++q)
    if (idx[q].first + idx[q].second <= D / 2) sub.push_back(q);
  Eigen::MatrixXcd Rc(R.rows(), static_cast<Eigen::Index>(sub.size()));
  for (std::size_t q = 0; q < sub.size(); ++q) Rc.col(static_cast<Eigen::Index>(q)) = R.col(sub[q]);

  SingularSpectrum s = compare_spectra(svd_of(R), svd_of(Rc), n_keep, opt.stabilization_tol);
  s.truncation = static_cast<int>(ncols);
  return s;
}

}  // namespace opnum
