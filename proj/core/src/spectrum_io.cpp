#include "opnum/spectrum_io.hpp"

#include <bit>
#include <cmath>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "opnum/errors.hpp"

namespace opnum {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_spectrum_csv(std::ostream& os, const SingularSpectrum& s) {
  const bool blocks = !s.block.empty();
  os << "n,a_n,stabilized,tail_budget" << (blocks ? ",block" : "") << '\n';
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    os << (i + 1) << ',' << format_double(s.values[i]) << ',' << (s.stabilized[i] ? "true" : "false") << ','
       << format_double(s.tail_budget);
    if (blocks) os << ',' << s.block[i];
    os << '\n';
  }
}

std::string spectrum_csv(const SingularSpectrum& s) {
  std::ostringstream os;
  write_spectrum_csv(os, s);
  return os.str();
}

namespace {

void put_le(std::ostream& os, double x) {
  auto bits = std::bit_cast<std::uint64_t>(x);
  unsigned char b[8];
  for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>(bits >> (8 * k));
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw Error("load_matrix: truncated file");
  std::uint64_t bits = 0;
  for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(b[k]) << (8 * k);
  return std::bit_cast<double>(bits);
}

}  // namespace

void dump_matrix(const std::string& path, const OperatorMatrix& M) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("dump_matrix: cannot open " + path);
  for (Eigen::Index j = 0; j < M.matrix.cols(); ++j)
    for (Eigen::Index i = 0; i < M.matrix.rows(); ++i) {
      put_le(os, M.matrix(i, j).real());
      put_le(os, M.matrix(i, j).imag());
    }
  nlohmann::json side;
  side["N"] = M.truncation;
  side["rows"] = M.matrix.rows();
  side["cols"] = M.matrix.cols();
  side["basis"] = basis_name(M.domain);
  side["codomain"] = M.codomain == Codomain::Hardy ? "hardy" : "image_frame";
  side["symbol"] = nlohmann::json::parse(to_json(M.phi));
  side["weight"] = nlohmann::json::parse(M.weight.to_json());
  side["tail_budget"] = M.tail_budget;
  side["nodes"] = M.nodes;
  std::ofstream js(path + ".json");
  if (!js) throw Error("dump_matrix: cannot open sidecar for " + path);
  js << side.dump(2) << '\n';
}

Eigen::MatrixXcd load_matrix(const std::string& path) {
  std::ifstream js(path + ".json");
  if (!js) throw Error("load_matrix: missing sidecar for " + path);
  nlohmann::json side = nlohmann::json::parse(js);
  Eigen::Index rows = side.at("rows").get<Eigen::Index>();
  Eigen::Index cols = side.at("cols").get<Eigen::Index>();
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("load_matrix: cannot open " + path);
  Eigen::MatrixXcd A(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      double re = get_le(is);
      double im = get_le(is);
      A(i, j) = cplx(re, im);
    }
  return A;
}

}  // namespace opnum
