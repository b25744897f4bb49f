#include "opnum/rational.hpp"

#include <algorithm>
#include <cmath>

#include "opnum/errors.hpp"
#include "opnum/parallel.hpp"

namespace opnum {

namespace {

constexpr std::size_t kChunk = 2048;

cplx kernel_entry(const DiskPoint& xi, const DiskPoint& xj, int power) {
  cplx den = one_minus_conj_product(xj, xi);
  return power == 1 ? 1.0 / den : 1.0 / (den * den);
}

}  // namespace

KernelPivots kernel_pivots(const std::vector<DiskPoint>& x, const std::vector<cplx>& c, int power, int count,
                           double rel_tol, double point_tol) {
  if (x.size() != c.size()) throw DomainError("kernel_pivots: size mismatch");
  if (power != 1 && power != 2) throw DomainError("kernel_pivots: power must be 1 or 2");
  const std::size_t m = x.size();
  const int r = std::min<int>(count, static_cast<int>(m));
  std::vector<double> diag(m);
  for (std::size_t i = 0; i < m; ++i) {
    double di = x[i].d;
    double dp = power == 1 ? di : di * di;
    diag[i] = dp > 0.0 ? std::norm(c[i]) / dp : 0.0;
  }
  Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> L =
      Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>::Zero(static_cast<Eigen::Index>(m), r);
  KernelPivots out;
  const std::vector<double> orig = diag;
  const double d0 = *std::max_element(diag.begin(), diag.end());
  if (!(d0 > 0.0) || !std::isfinite(d0)) return out;
  const std::size_t chunks = (m + kChunk - 1) / kChunk;
  for (int k = 0; k < r; ++k) {
    auto it = std::max_element(diag.begin(), diag.end());
    double dmax = *it;
    if (!(dmax > rel_tol * d0)) break;
    const auto i = static_cast<Eigen::Index>(it - diag.begin());
    out.index.push_back(static_cast<int>(i));
    out.residual.push_back(dmax);
    const Eigen::VectorXcd li = L.row(i).head(k).conjugate().transpose();
    const double scale = 1.0 / std::sqrt(dmax);
    const cplx ci = std::conj(c[i]);
    parallel_for(chunks, [&](std::size_t ch) {
      const std::size_t lo = ch * kChunk;
      const std::size_t hi = std::min(m, lo + kChunk);
      for (std::size_t p = lo; p < hi; ++p) {
        const auto pp = static_cast<Eigen::Index>(p);
        cplx v = c[p] * ci * kernel_entry(x[p], x[i], power);
        if (k > 0) v -= (L.row(pp).head(k).transpose().array() * li.array()).sum();
        L(pp, k) = v * scale;
        diag[p] -= std::norm(L(pp, k));
        if (diag[p] <= point_tol * orig[p]) diag[p] = 0.0;
      }
    });
    diag[i] = 0.0;
  }
  return out;
}

std::vector<DiskPoint> blaschke_pivots(const std::vector<DiskPoint>& x, const std::vector<cplx>& c, int count,
                                       double gap, std::vector<int>* index) {
  if (x.size() != c.size()) throw DomainError("blaschke_pivots: size mismatch");
  const std::size_t m = x.size();
  // log of the residual diagonal
  std::vector<double> score(m);
  for (std::size_t i = 0; i < m; ++i) {
    double c2 = std::norm(c[i]);
    score[i] = (c2 > 0.0 && x[i].d > 0.0) ? std::log(c2) - std::log(x[i].d) : -INFINITY;
  }
  std::vector<DiskPoint> poles;
  const std::size_t chunks = (m + kChunk - 1) / kChunk;
  for (int k = 0; k < count; ++k) {
    auto it = std::max_element(score.begin(), score.end());
    if (!std::isfinite(*it)) break;
    const auto i = static_cast<std::size_t>(it - score.begin());
    if (index) index->push_back(static_cast<int>(i));
    DiskPoint a = clip_pole(x[i], gap);
    poles.push_back(a);
    parallel_for(chunks, [&](std::size_t ch) {
      const std::size_t lo = ch * kChunk;
      const std::size_t hi = std::min(m, lo + kChunk);
      for (std::size_t p = lo; p < hi; ++p) {
        if (!std::isfinite(score[p])) continue;
        double f = std::abs(difference(x[p], a)) / std::abs(one_minus_conj_product(a, x[p]));
        score[p] = f > 0.0 ? score[p] + 2.0 * std::log(f) : -INFINITY;
      }
    });
  }
  return poles;
}

DiskPoint clip_pole(const DiskPoint& a, double min_gap) {
  double mod = std::abs(a.v);
  double gap = a.d / (1.0 + mod);  // 1 - |a|
  if (gap >= min_gap) return a;
  // a' = t a with 1 - t|a| = min_gap
  double one_minus_t = (min_gap - gap) / mod;
  DiskPoint p;
  p.v = (1.0 - one_minus_t) * a.v;
  p.om = a.om + one_minus_t * a.v;
  p.op = a.op - one_minus_t * a.v;
  p.d = min_gap * (2.0 - min_gap);
  return p;
}

Eigen::MatrixXcd mt_basis(const std::vector<DiskPoint>& x, const std::vector<DiskPoint>& poles) {
  const std::size_t m = x.size();
  const std::size_t n = poles.size();
  Eigen::MatrixXcd B(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  std::vector<double> norm(n);
  std::vector<cplx> unit(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!(poles[j].d > 0.0)) throw DomainError("mt_basis: pole on or outside the circle");
    norm[j] = std::sqrt(poles[j].d);
    double mod = std::abs(poles[j].v);
    unit[j] = mod > 0.0 ? std::conj(poles[j].v) / mod : cplx(1.0, 0.0);
  }
  const std::size_t chunks = (m + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t ch) {
    const std::size_t lo = ch * kChunk;
    const std::size_t hi = std::min(m, lo + kChunk);
    for (std::size_t i = lo; i < hi; ++i) {
      cplx prod = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        cplx den = one_minus_conj_product(poles[j], x[i]);
        B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = norm[j] / den * prod;
        if (poles[j].v == cplx(0.0, 0.0))
          prod *= x[i].v;
        else
          prod *= unit[j] * difference(x[i], poles[j]) / den;
      }
    }
  });
  return B;
}

StreamingFrame::StreamingFrame(Eigen::MatrixXcd initial, double tol) : tol_(tol) {
  if (initial.cols() == 0) {
    q_.resize(initial.rows(), 0);
    return;
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(initial);
  q_ = qr.householderQ() * Eigen::MatrixXcd::Identity(initial.rows(), initial.cols());
}

Eigen::VectorXcd StreamingFrame::project(const Eigen::VectorXcd& v) {
  Eigen::VectorXcd coef = q_.adjoint() * v;
  Eigen::VectorXcd res = v - q_ * coef;
  // second pass keeps the frame orthonormal to working precision
  Eigen::VectorXcd fix = q_.adjoint() * res;
  res -= q_ * fix;
  coef += fix;
  double rn = res.norm();
  double vn = v.norm();
  if (vn > 0.0 && rn > tol_ * vn) {
    q_.conservativeResize(Eigen::NoChange, q_.cols() + 1);
    q_.col(q_.cols() - 1) = res / rn;
    ++appended_;
    coef.conservativeResize(coef.size() + 1);
    coef(coef.size() - 1) = rn;
    last_residual_ = 0.0;
  } else {
    last_residual_ = rn;
  }
  return coef;
}

}  // namespace opnum
