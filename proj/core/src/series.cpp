#include "opnum/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "opnum/errors.hpp"

namespace opnum {

cplx PowerSeries::operator()(cplx z) const {
  cplx acc(0.0, 0.0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double default_radius(int degree) {
  if (degree <= 0) return 0.5;
  return std::max(0.5, 1.0 - 4.0 / degree);
}

int taylor_samples(int degree, double radius, const SeriesOptions& opt) {
  if (degree < 0) throw DomainError("taylor: negative degree");
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("taylor: radius must lie in (0,1)");
  double need = std::log(opt.aliasing_tolerance) / std::log(radius);
  double lo = std::max(4.0 * (degree + 1), need + degree);
  if (lo > opt.max_samples) throw SeriesError("taylor: radius too close to 1 for the aliasing tolerance");
  int m = 1;
  while (m < lo) m <<= 1;
  return m;
}

std::vector<std::vector<cplx>> coefficients_from_samples(const std::vector<std::vector<cplx>>& samples,
                                                         int degree, double radius) {
  std::vector<std::vector<cplx>> out(samples.size());
  Eigen::FFT<double> fft;
  std::vector<cplx> spec;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& s = samples[k];
    int m = static_cast<int>(s.size());
    fft.fwd(spec, s);
    out[k].resize(degree + 1);
    double scale = 1.0 / m;
    for (int n = 0; n <= degree; ++n) {
      out[k][n] = spec[n % m] * scale;
      scale /= radius;
    }
  }
  return out;
}

PowerSeries taylor(const std::function<cplx(cplx)>& f, int degree, double radius, const SeriesOptions& opt) {
  int m = taylor_samples(degree, radius, opt);
  std::vector<cplx> s(m);
  double maxmod = 0.0;
  for (int k = 0; k < m; ++k) {
    cplx z = std::polar(radius, 2.0 * std::numbers::pi * k / m);
    s[k] = f(z);
    maxmod = std::max(maxmod, std::abs(s[k]));
  }
  PowerSeries ps;
  ps.coefficients = coefficients_from_samples({s}, degree, radius)[0];
  ps.radius = radius;
  ps.samples = m;
  double bound = std::max(1.0, maxmod);
  ps.aliasing_bound = bound * std::pow(radius, m) / (1.0 - std::pow(radius, m));
  ps.tail_error = maxmod * std::pow(radius, degree + 1) / (1.0 - radius);
  if (ps.aliasing_bound > opt.aliasing_tolerance) throw SeriesError("taylor: aliasing bound exceeds tolerance");
  return ps;
}

PowerSeries taylor(const SymbolSpec& spec, int degree, double radius, const SeriesOptions& opt) {
  return taylor([&spec](cplx z) { return eval(spec, z); }, degree, radius, opt);
}

PowerSeries taylor(const SymbolSpec& spec, int degree) { return taylor(spec, degree, default_radius(degree)); }

}  // namespace opnum
