#pragma once

#include <functional>
#include <vector>

#include "opnum/symbols.hpp"

namespace opnum {

struct PowerSeries {
  std::vector<cplx> coefficients;  // c_0 .. c_D
  double radius = 0.5;             // sampling radius rho_s
  double tail_error = 0.0;         // max|f| rho^{D+1} / (1 - rho)
  double aliasing_bound = 0.0;
  int samples = 0;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  cplx operator()(cplx z) const;
};

struct SeriesOptions {
  double aliasing_tolerance = 1e-13;
  int max_samples = 1 << 22;
};

double default_radius(int degree);

// Taylor coefficients from DFT samples on |z| = radius; the sample count is
// the smallest power of two >= 4(D+1) meeting the aliasing tolerance.
PowerSeries taylor(const SymbolSpec& spec, int degree, double radius, const SeriesOptions& opt = {});
PowerSeries taylor(const SymbolSpec& spec, int degree);
PowerSeries taylor(const std::function<cplx(cplx)>& f, int degree, double radius, const SeriesOptions& opt = {});

// Sample count used by taylor() for a given degree and radius.
int taylor_samples(int degree, double radius, const SeriesOptions& opt = {});

// Coefficients c_0..c_D of each sampled function f_k, where samples[k][m]
// holds f_k(radius e^{2 pi i m / M}); M = samples[k].size().
std::vector<std::vector<cplx>> coefficients_from_samples(const std::vector<std::vector<cplx>>& samples,
                                                         int degree, double radius);

}  // namespace opnum
