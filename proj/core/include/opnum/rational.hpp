#pragma once

#include <vector>

#include <Eigen/Dense>

#include "opnum/disk_point.hpp"

namespace opnum {

struct KernelPivots {
  std::vector<int> index;        // pivot rows in selection order
  std::vector<double> residual;  // diagonal residual at selection
};

// Greedy pivoted Cholesky of K_ij = c_i conj(c_j) / (1 - x_i conj(x_j))^power.
// Stops after `count` pivots or when the largest residual drops below
// rel_tol times the initial maximum. A point whose residual falls below
// point_tol times its own diagonal is treated as exhausted.
KernelPivots kernel_pivots(const std::vector<DiskPoint>& x, const std::vector<cplx>& c, int power, int count,
                           double rel_tol = 1e-300, double point_tol = 1e-14);

// Same selection for the Szego kernel (power 1), using that the residual
// diagonal after pivots a_0..a_{k-1} is |c|^2 |B_k(x)|^2 / (1 - |x|^2) with
// B_k the Blaschke product on the chosen poles. Free of cancellation, so
// it continues far past the point where kernel_pivots exhausts. Returns
// the poles, clipped with clip_pole(., gap).
std::vector<DiskPoint> blaschke_pivots(const std::vector<DiskPoint>& x, const std::vector<cplx>& c, int count,
                                       double gap = 1e-13, std::vector<int>* index = nullptr);

// Pole pulled radially inward so that 1 - |a| >= min_gap, with offsets kept
// accurate.
DiskPoint clip_pole(const DiskPoint& a, double min_gap = 1e-13);

// M x n matrix with entries b_j(x_i) of the Malmquist-Takenaka system
//   b_j(x) = sqrt(1 - |a_j|^2) / (1 - conj(a_j) x) * prod_{k<j} u_k (x - a_k)/(1 - conj(a_k) x),
// with |u_k| = 1 (u_k = 1 for a_k = 0). Orthonormal in H^2.
Eigen::MatrixXcd mt_basis(const std::vector<DiskPoint>& x, const std::vector<DiskPoint>& poles);

// Orthonormal frame grown one column at a time; project() returns the
// coefficients of v in the frame, first appending the normalized residual
// when it exceeds tol * |v|.
class StreamingFrame {
 public:
  StreamingFrame(Eigen::MatrixXcd initial, double tol = 1e-10);

  Eigen::VectorXcd project(const Eigen::VectorXcd& v);
  Eigen::Index rank() const { return q_.cols(); }
  Eigen::Index appended() const { return appended_; }
  // Norm of the part of the last projected vector left outside the frame.
  double last_residual() const { return last_residual_; }

 private:
  Eigen::MatrixXcd q_;
  double tol_;
  Eigen::Index appended_ = 0;
  double last_residual_ = 0.0;
};

}  // namespace opnum
