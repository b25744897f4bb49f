#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opnum/hardy1d.hpp"

namespace opnum {

// Analytic self-map of the bidisk in one of four structured forms:
//   Separated  (phi(z1), psi(z2))
//   Glued      (phi(z1), phi(z1))
//   Triangular (phi(z1), psi(z1) h(z2)) with h inner, h(0) = 0
//   Diagonal   (r_1 z_1, ..., r_m z_m)
class Symbol2D {
 public:
  enum class Variant { Separated, Glued, Triangular, Diagonal };

  static Symbol2D separated(const SymbolSpec& phi, const SymbolSpec& psi);
  static Symbol2D glued(const SymbolSpec& phi);
  static Symbol2D triangular(const SymbolSpec& phi, const SymbolSpec& psi, const SymbolSpec& h);
  static Symbol2D diagonal(std::vector<double> radii);

  Variant variant() const { return variant_; }
  const SymbolSpec& phi() const { return phi_; }
  const SymbolSpec& psi() const { return psi_; }
  const SymbolSpec& h() const { return h_; }
  const std::vector<double>& radii() const { return radii_; }
  int dimension() const;

  // Image of (z1, z2); Diagonal needs dimension 2 here.
  std::pair<cplx, cplx> operator()(cplx z1, cplx z2) const;

  std::string to_json() const;
  static Symbol2D from_json(std::string_view text);

 private:
  Variant variant_ = Variant::Diagonal;
  SymbolSpec phi_, psi_, h_;
  std::vector<double> radii_;
};

// Non-increasing rearrangement of all products a_m(S) a_n(T), first `count`.
// A product is stabilized when both factors are and it lies above the level
// where the finite lists stop containing every product.
SingularSpectrum tensor_spectrum(const SingularSpectrum& S, const SingularSpectrum& T, std::size_t count);

struct GluedOptions {
  int poles = 0;  // one-variable poles; 0 means max(8, N / 16)
  int nodes = 16384;
  int grading = 8;
  double frame_tol = 1e-10;
  double pole_gap = 1e-13;
};

// Approximation numbers of C_Phi for Phi = (phi, phi), which equal those of
// C_phi : B^2 -> H^2. Symbols staying inside the disk use the Bergman
// monomial matrix; symbols touching the circle expand C_Phi on symmetric
// products of a Malmquist-Takenaka basis. Throws UnboundedOperator when the
// kernel witness grows.
SingularSpectrum glued_spectrum(const SymbolSpec& phi, int N, std::size_t n_keep, const GluedOptions& opt = {});

struct KernelWitness {
  std::vector<double> a;
  std::vector<double> ratio;  // sqrt(1 - a^2) / (1 - |phi(a)|^2)
  double slope = 0.0;         // of log ratio against log 1/(1 - a)
  bool unbounded = false;
};

// ((1 - |a|^2)(1 - |b|^2))^{-1/2}
double kernel_norm(cplx a, cplx b);

// Ratio |K_{phi(a), phi(a)}| / |K_{a, 0}| along a = 1 - 2^{-j}. It grows
// without bound exactly when C_Phi is unbounded for the glued symbol.
KernelWitness glued_kernel_witness(const SymbolSpec& phi, int levels = 40, double slope_threshold = 0.05);

struct TriangularOptions {
  int blocks = -1;             // K; negative picks ceil(log(floor/2)/log rho)
  double floor = 1e-7;         // smallest singular value of interest
  int initial_truncation = 32;  // adaptive start for each block
  bool adaptive = true;         // double N per block until values above floor settle
  double stabilization_tol = 1e-4;
  BuildOptions build;
};

struct TriangularModel {
  SingularSpectrum merged;
  std::vector<SingularSpectrum> blocks;  // T_k = M_{psi^k} C_phi, k = 0..K
  std::vector<double> block_norm;        // a_1(T_k)
  double rho = 0.0;                      // sup |psi| on the boundary grid
  int K = 0;
  double ceiling = 0.0;  // 2 rho^{K+1}
};

// Block model of C_Phi for Phi = (phi(z1), psi(z1) h(z2)) with h inner.
TriangularModel triangular_model(const SymbolSpec& phi, const SymbolSpec& psi, int N, std::size_t n_keep,
                                 const TriangularOptions& opt = {});
SingularSpectrum triangular_spectrum(const SymbolSpec& phi, const SymbolSpec& psi, int K, int N, std::size_t n_keep,
                                     const TriangularOptions& opt = {});

// Merges block spectra into one non-increasing list tagged with block ids.
SingularSpectrum merge_blocks(const std::vector<SingularSpectrum>& blocks, std::size_t n_keep);

struct Direct2DOptions {
  int max_degree = 40;
  int graded_nodes = 8192;  // first variable when a component touches the circle
  int second_graded_nodes = 1024;
  int grading = 8;
  double contact_threshold = 0.999;
  double stabilization_tol = 1e-4;
  double pole_gap = 1e-13;
};

// Matrix of C_Phi on products e_j(z1) f_k(z2), j + k <= D, with e, f the
// monomials or, for a coordinate whose image touches the circle, a
// Malmquist-Takenaka system; entries from boundary quadrature on the torus.
// Certified against degree D/2.
SingularSpectrum direct2d_spectrum(const Symbol2D& Phi, int degree, std::size_t n_keep,
                                   const Direct2DOptions& opt = {});

// Triangular(HalfShift o Lens(theta), OuterWeight(theta) o HalfShift o Lens(theta), z).
Symbol2D chobou_symbol(double theta);

}  // namespace opnum
