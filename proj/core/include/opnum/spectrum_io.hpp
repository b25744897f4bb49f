#pragma once

#include <iosfwd>
#include <string>

#include "opnum/hardy1d.hpp"

namespace opnum {

// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

// Columns n, a_n, stabilized, tail_budget, plus block when present. n is 1-based.
void write_spectrum_csv(std::ostream& os, const SingularSpectrum& s);
std::string spectrum_csv(const SingularSpectrum& s);

// Flat little-endian (re, im) pairs in column-major order at `path`, with
// a JSON sidecar at path + ".json".
void dump_matrix(const std::string& path, const OperatorMatrix& M);

// Reads a dump back; the sidecar supplies the shape.
Eigen::MatrixXcd load_matrix(const std::string& path);

}  // namespace opnum
