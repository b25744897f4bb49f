#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opnum/disk_point.hpp"

namespace opnum {

enum class SymbolKind {
  Identity,
  Affine,
  Lens,
  Cusp,
  BlaschkeFinite,
  BlaschkeInterp,
  OuterWeight,
  Power,
  HalfShift,
  Compose,
  Product,
  Scalar,
};

std::string_view kind_name(SymbolKind kind);

// Immutable expression tree for an analytic map on the disk. Nodes are
// shared, so copies are cheap and safe across threads.
class SymbolSpec {
 public:
  SymbolSpec();  // identity

  static SymbolSpec identity();
  static SymbolSpec affine(double r, cplx c);
  static SymbolSpec lens(double theta);
  static SymbolSpec cusp();
  static SymbolSpec blaschke(std::vector<cplx> zeros);
  static SymbolSpec blaschke_interp(double sigma, double eps1, int count);
  static SymbolSpec outer_weight(double theta);
  static SymbolSpec power(int k);
  static SymbolSpec halfshift();
  static SymbolSpec compose(const SymbolSpec& inner, const SymbolSpec& outer);
  static SymbolSpec product(const SymbolSpec& left, const SymbolSpec& right);
  static SymbolSpec scalar(cplx c, const SymbolSpec& inner);

  SymbolKind kind() const;
  double theta() const;
  double scale() const;
  cplx offset() const;
  int exponent() const;
  double sigma() const;
  double eps1() const;
  int count() const;
  cplx factor() const;
  const std::vector<cplx>& zeros() const;
  const SymbolSpec& inner() const;
  const SymbolSpec& outer() const;
  const SymbolSpec& left() const;
  const SymbolSpec& right() const;

  cplx operator()(cplx z) const;
  DiskPoint at(const DiskPoint& z) const;

  std::string describe() const;
  bool operator==(const SymbolSpec& other) const;

 private:
  struct Node;
  explicit SymbolSpec(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Map value at |z| <= 1. Throws DomainError for |z| > 1 + 1e-12 and
// BranchError when an intermediate lands on a branch cut.
cplx eval(const SymbolSpec& spec, cplx z);
DiskPoint eval_point(const SymbolSpec& spec, const DiskPoint& z);

// Cusp constant a = 1 - (2/pi) log(sqrt 2 - 1).
double cusp_constant();
// Intermediate chi_0 of the cusp chain.
cplx cusp_chi0(cplx z);

// Zeros 1 - eps1 sigma^{j-1} and the tail bound eps1 sigma^J / (1 - sigma).
std::vector<double> interp_zeros(double sigma, double eps1, int count);
double interp_tail_bound(double sigma, double eps1, int count);

// Degree when the map is a polynomial, nullopt otherwise.
std::optional<int> polynomial_degree(const SymbolSpec& spec);

std::string to_json(const SymbolSpec& spec);
SymbolSpec symbol_from_json(std::string_view text);

}  // namespace opnum
