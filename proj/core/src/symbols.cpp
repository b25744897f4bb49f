#include "opnum/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "opnum/errors.hpp"

namespace opnum {

struct SymbolSpec::Node {
  SymbolKind kind = SymbolKind::Identity;
  double theta = 0.0;
  double scale = 1.0;
  cplx offset{0.0, 0.0};
  int exponent = 1;
  double sigma = 0.0;
  double eps1 = 0.0;
  int count = 0;
  cplx factor{1.0, 0.0};
  std::vector<cplx> zeros;
  std::vector<double> interp;
  std::vector<SymbolSpec> kids;
};

namespace {

constexpr double kPi = std::numbers::pi;

const SymbolSpec& identity_instance() {
  static const SymbolSpec id = SymbolSpec::identity();
  return id;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec(what);
}

double im_accurate(const DiskPoint& z) {
  if (std::abs(z.om) < 0.5) return -z.om.imag();
  if (std::abs(z.op) < 0.5) return z.op.imag();
  return z.v.imag();
}

// 1 - e^{-g} without cancellation for small g.
cplx one_minus_exp_neg(cplx g) {
  if (std::abs(g) < 1e-3) {
    cplx g2 = g * g;
    return g - 0.5 * g2 + g2 * g / 6.0 - g2 * g2 / 24.0;
  }
  return 1.0 - std::exp(-g);
}

DiskPoint lens_point(double theta, const DiskPoint& z) {
  if (z.op == cplx(0.0, 0.0)) {
    DiskPoint r;
    r.v = -1.0;
    r.om = 2.0;
    r.op = 0.0;
    r.d = 0.0;
    return r;
  }
  double d = std::max(z.d, 0.0);
  double den = std::norm(z.op);
  cplx u(d / den, -2.0 * im_accurate(z) / den);
  if (u == cplx(0.0, 0.0)) {
    DiskPoint r;
    r.v = 1.0;
    r.om = 0.0;
    r.op = 2.0;
    r.d = 0.0;
    return r;
  }
  cplx w = std::polar(std::pow(std::abs(u), theta), theta * std::atan2(u.imag(), u.real()));
  cplx onepw = 1.0 + w;
  DiskPoint r;
  r.v = (1.0 - w) / onepw;
  r.om = 2.0 * w / onepw;
  r.op = 2.0 / onepw;
  r.d = std::max(0.0, 4.0 * w.real() / std::norm(onepw));
  return r;
}

DiskPoint outer_weight_point(double theta, const DiskPoint& z) {
  if (z.om == cplx(0.0, 0.0)) {
    DiskPoint r;
    r.v = 0.0;
    return r;
  }
  double d = std::max(z.d, 0.0);
  double den = std::norm(z.om);
  cplx u(d / den, 2.0 * im_accurate(z) / den);
  cplx g = std::polar(std::pow(std::abs(u), theta), theta * std::atan2(u.imag(), u.real()));
  DiskPoint r;
  if (g.real() > 745.0) {
    r.v = 0.0;
    r.om = 1.0;
    r.op = 1.0;
    r.d = 1.0;
    return r;
  }
  r.v = std::exp(-g);
  r.om = one_minus_exp_neg(g);
  r.op = 1.0 + r.v;
  r.d = -std::expm1(-2.0 * g.real());
  return r;
}

cplx rotated_sqrt(cplx q) {
  // sqrt continuous on the closed upper half-plane: e^{i pi/4} sqrt(-i q)
  return std::polar(1.0, 0.25 * kPi) * std::sqrt(cplx(0.0, -1.0) * q);
}

cplx cusp_chi0_from_point(const DiskPoint& z) {
  const cplx i(0.0, 1.0);
  cplx den = i * z.v - 1.0;
  cplx q = (z.v - i) / den;
  cplx s = rotated_sqrt(q);
  // sqrt(q) - i = (q + 1)/(sqrt(q) + i), with q + 1 = -(1+i)(1-z)/(iz-1)
  cplx qp1 = -(1.0 + i) * z.om / den;
  return (qp1 / (s + i)) / (1.0 - i * s);
}

DiskPoint cusp_point(const DiskPoint& z) {
  const cplx i(0.0, 1.0);
  const double a = cusp_constant();
  DiskPoint r;
  if (z.om == cplx(0.0, 0.0)) {
    r.v = 1.0;
    r.om = 0.0;
    r.op = 2.0;
    r.d = 0.0;
    return r;
  }
  cplx chi0;
  if (std::abs(i * z.v - 1.0) < 1e-300) {
    chi0 = i;  // limit at the pole of q (z = -i)
  } else {
    chi0 = cusp_chi0_from_point(z);
  }
  if (chi0 == cplx(0.0, 0.0) || (chi0.imag() == 0.0 && chi0.real() < 0.0)) {
    throw BranchError("cusp: chi0 on the logarithm cut");
  }
  cplx chi1 = std::log(chi0);
  cplx chi2 = 1.0 - (2.0 / kPi) * chi1;
  if (chi2 == cplx(0.0, 0.0)) throw BranchError("cusp: chi2 vanished");
  cplx chi3 = a / chi2;
  r.v = 1.0 - chi3;
  r.om = chi3;
  r.op = 2.0 - chi3;
  if (std::abs(chi3) < 0.5) {
    r.d = std::max(0.0, 2.0 * chi3.real() - std::norm(chi3));
  } else {
    r.d = 1.0 - std::norm(r.v);
  }
  return r;
}

DiskPoint affine_point(double r, cplx c, const DiskPoint& z) {
  DiskPoint p;
  p.v = r * z.v + c;
  p.om = (1.0 - r - c) + r * z.om;
  p.op = (1.0 + c - r) + r * z.op;
  if (c.imag() == 0.0 && c.real() >= 0.0 && std::abs(r + c.real() - 1.0) < 1e-15) {
    p.d = 2.0 * r * (1.0 - r) * z.om.real() + r * r * std::max(z.d, 0.0);
  } else {
    p.d = 1.0 - std::norm(p.v);
  }
  return p;
}

DiskPoint mobius_point(cplx a, const DiskPoint& z) {
  DiskPoint p;
  if (a == cplx(0.0, 0.0)) {
    p = z;
    return p;
  }
  DiskPoint ap = DiskPoint::from(a);
  cplx den = one_minus_conj_product(ap, z);
  cplx unit = std::abs(a) / a;
  p.v = unit * difference(ap, z) / den;
  p.om = 1.0 - p.v;
  p.op = 1.0 + p.v;
  p.d = (1.0 - std::norm(a)) * std::max(z.d, 0.0) / std::norm(den);
  return p;
}

DiskPoint interp_factor(double eps, const DiskPoint& z) {
  // a = 1 - eps real in (0,1): (a - z)/(1 - a z)
  double a = 1.0 - eps;
  cplx den = eps + a * z.om;
  DiskPoint p;
  p.v = (z.om - eps) / den;
  p.om = eps * z.op / den;
  p.op = 1.0 + p.v;
  p.d = eps * (2.0 - eps) * std::max(z.d, 0.0) / std::norm(den);
  return p;
}

DiskPoint constant_point(cplx c) { return DiskPoint::from(c); }

}  // namespace

std::string_view kind_name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Identity: return "identity";
    case SymbolKind::Affine: return "affine";
    case SymbolKind::Lens: return "lens";
    case SymbolKind::Cusp: return "cusp";
    case SymbolKind::BlaschkeFinite: return "blaschke";
    case SymbolKind::BlaschkeInterp: return "blaschke_interp";
    case SymbolKind::OuterWeight: return "outer_weight";
    case SymbolKind::Power: return "power";
    case SymbolKind::HalfShift: return "halfshift";
    case SymbolKind::Compose: return "compose";
    case SymbolKind::Product: return "product";
    case SymbolKind::Scalar: return "scalar";
  }
  return "unknown";
}

SymbolSpec::SymbolSpec() : node_(identity_instance().node_) {}

SymbolSpec::SymbolSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

SymbolSpec SymbolSpec::identity() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->kind = SymbolKind::Identity;
    return std::shared_ptr<const Node>(n);
  }();
  return SymbolSpec(node);
}

SymbolSpec SymbolSpec::affine(double r, cplx c) {
  require(r > 0.0 && r <= 1.0, "affine: scale must lie in (0,1]");
  require(r + std::abs(c) <= 1.0 + 1e-15, "affine: |r| + |c| must not exceed 1");
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::Affine;
  n->scale = r;
  n->offset = c;
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::lens(double theta) {
  require(theta > 0.0 && theta <= 1.0, "lens: theta must lie in (0,1]");
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::Lens;
  n->theta = theta;
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::cusp() {
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::Cusp;
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::blaschke(std::vector<cplx> zeros) {
  for (cplx a : zeros) require(std::abs(a) < 1.0, "blaschke: zeros must lie in the open disk");
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::BlaschkeFinite;
  n->zeros = std::move(zeros);
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::blaschke_interp(double sigma, double eps1, int count) {
  require(sigma > 0.0 && sigma < 1.0, "blaschke_interp: sigma must lie in (0,1)");
  require(eps1 > 0.0 && eps1 < 1.0, "blaschke_interp: eps1 must lie in (0,1)");
  require(count >= 1, "blaschke_interp: count must be positive");
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::BlaschkeInterp;
  n->sigma = sigma;
  n->eps1 = eps1;
  n->count = count;
  double e = eps1;
  for (int j = 0; j < count; ++j, e *= sigma) n->interp.push_back(e);
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::outer_weight(double theta) {
  require(theta > 0.0 && theta <= 1.0, "outer_weight: theta must lie in (0,1]");
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::OuterWeight;
  n->theta = theta;
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::power(int k) {
  require(k >= 0, "power: exponent must be non-negative");
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::Power;
  n->exponent = k;
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::halfshift() {
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::HalfShift;
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::compose(const SymbolSpec& inner, const SymbolSpec& outer) {
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::Compose;
  n->kids = {inner, outer};
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::product(const SymbolSpec& left, const SymbolSpec& right) {
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::Product;
  n->kids = {left, right};
  return SymbolSpec(n);
}

SymbolSpec SymbolSpec::scalar(cplx c, const SymbolSpec& inner) {
  require(std::abs(c) <= 1.0 + 1e-15, "scalar: |c| must not exceed 1");
  auto n = std::make_shared<Node>();
  n->kind = SymbolKind::Scalar;
  n->factor = c;
  n->kids = {inner};
  return SymbolSpec(n);
}

SymbolKind SymbolSpec::kind() const { return node_->kind; }
double SymbolSpec::theta() const { return node_->theta; }
double SymbolSpec::scale() const { return node_->scale; }
cplx SymbolSpec::offset() const { return node_->offset; }
int SymbolSpec::exponent() const { return node_->exponent; }
double SymbolSpec::sigma() const { return node_->sigma; }
double SymbolSpec::eps1() const { return node_->eps1; }
int SymbolSpec::count() const { return node_->count; }
cplx SymbolSpec::factor() const { return node_->factor; }
const std::vector<cplx>& SymbolSpec::zeros() const { return node_->zeros; }
const SymbolSpec& SymbolSpec::inner() const {
  if (node_->kids.empty()) throw InvalidSpec("symbol has no inner term");
  return node_->kids[0];
}
const SymbolSpec& SymbolSpec::outer() const {
  if (node_->kids.size() < 2) throw InvalidSpec("symbol has no outer term");
  return node_->kids[1];
}
const SymbolSpec& SymbolSpec::left() const { return inner(); }
const SymbolSpec& SymbolSpec::right() const { return outer(); }

cplx SymbolSpec::operator()(cplx z) const { return eval(*this, z); }

DiskPoint SymbolSpec::at(const DiskPoint& z) const {
  const Node& n = *node_;
  switch (n.kind) {
    case SymbolKind::Identity: return z;
    case SymbolKind::Affine: return affine_point(n.scale, n.offset, z);
    case SymbolKind::HalfShift: return affine_point(0.5, cplx(0.5, 0.0), z);
    case SymbolKind::Lens: return lens_point(n.theta, z);
    case SymbolKind::Cusp: return cusp_point(z);
    case SymbolKind::OuterWeight: return outer_weight_point(n.theta, z);
    case SymbolKind::Power: {
      DiskPoint acc = constant_point(1.0);
      for (int k = 0; k < n.exponent; ++k) acc = multiply(acc, z);
      return acc;
    }
    case SymbolKind::BlaschkeFinite: {
      DiskPoint acc = constant_point(1.0);
      for (cplx a : n.zeros) acc = multiply(acc, mobius_point(a, z));
      return acc;
    }
    case SymbolKind::BlaschkeInterp: {
      DiskPoint acc = constant_point(1.0);
      for (double e : n.interp) acc = multiply(acc, interp_factor(e, z));
      return acc;
    }
    case SymbolKind::Compose: return n.kids[1].at(n.kids[0].at(z));
    case SymbolKind::Product: return multiply(n.kids[0].at(z), n.kids[1].at(z));
    case SymbolKind::Scalar: {
      DiskPoint x = n.kids[0].at(z);
      cplx c = n.factor;
      DiskPoint p;
      p.v = c * x.v;
      p.om = (1.0 - c) + c * x.om;
      p.op = (1.0 + c) - c * x.om;
      p.d = (1.0 - std::norm(c)) + std::norm(c) * std::max(x.d, 0.0);
      return p;
    }
  }
  throw InvalidSpec("unknown symbol kind");
}

std::string SymbolSpec::describe() const {
  const Node& n = *node_;
  std::ostringstream os;
  os.precision(17);
  switch (n.kind) {
    case SymbolKind::Identity: os << "z"; break;
    case SymbolKind::Affine: os << n.scale << "z+(" << n.offset.real() << "," << n.offset.imag() << ")"; break;
    case SymbolKind::HalfShift: os << "(1+z)/2"; break;
    case SymbolKind::Lens: os << "lens(" << n.theta << ")"; break;
    case SymbolKind::Cusp: os << "cusp"; break;
    case SymbolKind::OuterWeight: os << "outer(" << n.theta << ")"; break;
    case SymbolKind::Power: os << "z^" << n.exponent; break;
    case SymbolKind::BlaschkeFinite: os << "blaschke[" << n.zeros.size() << "]"; break;
    case SymbolKind::BlaschkeInterp: os << "blaschke(" << n.sigma << "," << n.eps1 << "," << n.count << ")"; break;
    case SymbolKind::Compose: os << n.kids[1].describe() << " o " << n.kids[0].describe(); break;
    case SymbolKind::Product: os << "(" << n.kids[0].describe() << ")*(" << n.kids[1].describe() << ")"; break;
    case SymbolKind::Scalar: os << "(" << n.factor.real() << "," << n.factor.imag() << ")*" << n.kids[0].describe(); break;
  }
  return os.str();
}

bool SymbolSpec::operator==(const SymbolSpec& other) const {
  if (node_ == other.node_) return true;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case SymbolKind::Identity:
    case SymbolKind::Cusp:
    case SymbolKind::HalfShift: return true;
    case SymbolKind::Affine: return x.scale == y.scale && x.offset == y.offset;
    case SymbolKind::Lens:
    case SymbolKind::OuterWeight: return x.theta == y.theta;
    case SymbolKind::Power: return x.exponent == y.exponent;
    case SymbolKind::BlaschkeFinite: return x.zeros == y.zeros;
    case SymbolKind::BlaschkeInterp: return x.sigma == y.sigma && x.eps1 == y.eps1 && x.count == y.count;
    case SymbolKind::Compose:
    case SymbolKind::Product: return x.kids == y.kids;
    case SymbolKind::Scalar: return x.factor == y.factor && x.kids == y.kids;
  }
  return false;
}

DiskPoint eval_point(const SymbolSpec& spec, const DiskPoint& z) { return spec.at(z); }

cplx eval(const SymbolSpec& spec, cplx z) {
  double m = std::abs(z);
  if (!(m <= 1.0 + 1e-12)) throw DomainError("eval: |z| exceeds 1");
  DiskPoint p = DiskPoint::from(z);
  if (m >= 1.0) {
    p = DiskPoint::on_circle(std::arg(z));
  }
  return spec.at(p).v;
}

double cusp_constant() {
  static const double a = 1.0 - (2.0 / kPi) * std::log(std::sqrt(2.0) - 1.0);
  return a;
}

cplx cusp_chi0(cplx z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("cusp_chi0: |z| exceeds 1");
  const cplx i(0.0, 1.0);
  if (std::abs(i * z - 1.0) < 1e-300) return i;
  return cusp_chi0_from_point(std::abs(z) >= 1.0 ? DiskPoint::on_circle(std::arg(z)) : DiskPoint::from(z));
}

std::vector<double> interp_zeros(double sigma, double eps1, int count) {
  std::vector<double> z;
  double e = eps1;
  for (int j = 0; j < count; ++j, e *= sigma) z.push_back(1.0 - e);
  return z;
}

double interp_tail_bound(double sigma, double eps1, int count) {
  return eps1 * std::pow(sigma, count) / (1.0 - sigma);
}

std::optional<int> polynomial_degree(const SymbolSpec& spec) {
  switch (spec.kind()) {
    case SymbolKind::Identity:
    case SymbolKind::HalfShift: return 1;
    case SymbolKind::Affine: return 1;
    case SymbolKind::Power: return spec.exponent();
    case SymbolKind::Scalar: return polynomial_degree(spec.inner());
    case SymbolKind::Product: {
      auto a = polynomial_degree(spec.left());
      auto b = polynomial_degree(spec.right());
      if (a && b) return *a + *b;
      return std::nullopt;
    }
    case SymbolKind::Compose: {
      auto a = polynomial_degree(spec.inner());
      auto b = polynomial_degree(spec.outer());
      if (a && b) return *a * *b;
      return std::nullopt;
    }
    case SymbolKind::BlaschkeFinite:
      if (std::all_of(spec.zeros().begin(), spec.zeros().end(), [](cplx a) { return a == cplx(0.0, 0.0); }))
        return static_cast<int>(spec.zeros().size());
      return std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace opnum
