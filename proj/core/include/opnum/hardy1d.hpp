#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "opnum/quadrature.hpp"
#include "opnum/symbols.hpp"

namespace opnum {

// Multiplier w in M_w C_phi: 1, a constant, a polynomial, or s^k for a
// symbol s.
class Weight {
 public:
  enum class Kind { Unit, Constant, Polynomial, SymbolPower };

  Weight();  // unit
  static Weight unit();
  static Weight constant(cplx c);
  static Weight polynomial(std::vector<cplx> coefficients);  // c_0 + c_1 z + ...
  static Weight symbol(const SymbolSpec& s, int power = 1);

  Kind kind() const { return kind_; }
  bool is_unit() const { return kind_ == Kind::Unit; }
  cplx value() const { return value_; }
  const std::vector<cplx>& coefficients() const { return coefficients_; }
  const SymbolSpec& base() const { return base_; }
  int power() const { return power_; }
  // Degree when w is a polynomial (0 for constants).
  std::optional<int> degree() const;

  cplx operator()(cplx z) const;
  cplx at(const DiskPoint& z) const;
  std::string describe() const;
  std::string to_json() const;

 private:
  Kind kind_ = Kind::Unit;
  cplx value_{1.0, 0.0};
  std::vector<cplx> coefficients_;
  SymbolSpec base_;
  int power_ = 0;
};

// Domain basis of a truncated operator matrix.
//   Hardy     z^n
//   Bergman   sqrt(n+1) z^n
//   Rational  Malmquist-Takenaka functions with poles at kernel pivots of
//             the boundary image; suited to symbols touching the circle
//   Auto      Hardy when phi stays away from the circle, Rational otherwise
enum class Basis { Hardy, Bergman, Rational, Auto };
enum class Codomain { Hardy, ImageFrame };

std::string basis_name(Basis b);

struct BuildOptions {
  int max_truncation = 4096;
  double contact_threshold = 0.999;  // Auto switches to Rational above this sup|phi|
  int nodes = 0;                     // boundary nodes for Rational; 0 means max(16384, 32 N)
  int grading = 8;
  int norm_nodes = 16384;            // graded quadrature for image norms
  double pole_gap = 1e-13;
};

struct OperatorMatrix {
  Eigen::MatrixXcd matrix;
  Basis domain = Basis::Hardy;
  Codomain codomain = Codomain::Hardy;
  int truncation = 0;
  std::vector<double> column_tail;  // missing codomain mass per column
  double tail_budget = 0.0;
  int nodes = 0;
  std::vector<cplx> poles;  // Rational only
  Weight weight;
  SymbolSpec phi;
};

// Matrix of M_w C_phi truncated to N domain basis vectors. For Hardy and
// Bergman, column n holds the first N Taylor coefficients of w phi^n. For
// Rational, the matrix is the triangular factor of the weighted boundary
// samples w(zeta) b_j(phi(zeta)), whose singular values are those of the
// operator on the span of b_0..b_{N-1}. In every basis the leading
// (N/2) x (N/2) block is the N/2 truncation.
OperatorMatrix build_matrix(const Weight& w, const SymbolSpec& phi, int N, Basis domain = Basis::Hardy,
                            const BuildOptions& opt = {});

struct SingularSpectrum {
  std::vector<double> values;
  std::vector<bool> stabilized;
  std::vector<double> rel_change;  // against the coarse truncation; inf when absent
  std::vector<int> block;          // empty unless merged from blocks
  int truncation = 0;
  double certificate = 0.0;  // max relative change over the stabilized prefix
  double tail_budget = 0.0;
  double discarded_ceiling = 0.0;
  double stabilization_tol = 1e-4;

  std::size_t size() const { return values.size(); }
  // Length of the leading run of stabilized values.
  std::size_t stable_prefix() const;
  // Values whose stabilized flag is set, in order.
  std::vector<double> stabilized_values() const;
};

// Flags value n stabilized when |fine_n - coarse_n| / fine_n < tol.
SingularSpectrum compare_spectra(const std::vector<double>& fine, const std::vector<double>& coarse,
                                 std::size_t n_keep, double tol = 1e-4);

// First n_keep singular values, certified against the leading N/2 block.
SingularSpectrum singular_values(const OperatorMatrix& M, std::size_t n_keep, double tol = 1e-4);

// Eigenvalues of the truncation ordered by non-increasing modulus.
std::vector<cplx> eigenvalues(const OperatorMatrix& M, std::size_t n_keep);

struct HsNorm {
  double value = 0.0;  // sqrt of the integral when converged
  bool divergent = false;
  QuadratureReport report;
};

// sqrt( int |w|^2 / (1 - |phi|^2)^power dm ). power 1 gives the
// Hilbert-Schmidt norm of M_w C_phi on H^2; power 2 gives that of
// C_phi : B^2 -> H^2.
HsNorm hs_norm(const Weight& w, const SymbolSpec& phi, int power = 1, const QuadratureOptions& opt = {});

// Sum of squared column norms of the matrix.
double column_square_sum(const OperatorMatrix& M);

// ||w phi^n||_{H^2}^2 for n = 0..count-1, by graded boundary quadrature.
std::vector<double> image_norms_squared(const Weight& w, const SymbolSpec& phi, int count, int nodes = 16384,
                                        int grading = 16);

// sqrt((1 + |phi(0)|) / (1 - |phi(0)|))
double operator_norm_bound(cplx phi0);

// max(exp(-a n), exp(-R 2^{m theta})) with a = log(sqrt(16 C^2 + 1) / (4 C))
double bound_special(int n, int m, double theta, double R, double C);
double special_rate(double C);

// sqrt(1 - r) delta Gamma^n
double widom_lower_form(double r, double delta, double gamma, int n);

}  // namespace opnum
