#include <json.hpp>

#include "opnum/errors.hpp"
#include "opnum/symbols.hpp"
#include "json_detail.hpp"

namespace opnum {

using nlohmann::json;

namespace detail {

json complex_to_json(cplx c) {
  if (c.imag() == 0.0) return c.real();
  return json::array({c.real(), c.imag()});
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw InvalidSpec("expected a number or a [re, im] pair");
}

json symbol_to_json(const SymbolSpec& s) {
  json j;
  j["kind"] = std::string(kind_name(s.kind()));
  switch (s.kind()) {
    case SymbolKind::Identity:
    case SymbolKind::Cusp:
    case SymbolKind::HalfShift: break;
    case SymbolKind::Affine:
      j["scale"] = s.scale();
      j["offset"] = complex_to_json(s.offset());
      break;
    case SymbolKind::Lens:
    case SymbolKind::OuterWeight: j["theta"] = s.theta(); break;
    case SymbolKind::Power: j["q"] = s.exponent(); break;
    case SymbolKind::BlaschkeFinite: {
      json zs = json::array();
      for (cplx a : s.zeros()) zs.push_back(complex_to_json(a));
      j["zeros"] = zs;
      break;
    }
    case SymbolKind::BlaschkeInterp:
      j["sigma"] = s.sigma();
      j["eps1"] = s.eps1();
      j["count"] = s.count();
      break;
    case SymbolKind::Compose:
      j["inner"] = symbol_to_json(s.inner());
      j["outer"] = symbol_to_json(s.outer());
      break;
    case SymbolKind::Product:
      j["left"] = symbol_to_json(s.left());
      j["right"] = symbol_to_json(s.right());
      break;
    case SymbolKind::Scalar:
      j["c"] = complex_to_json(s.factor());
      j["inner"] = symbol_to_json(s.inner());
      break;
  }
  return j;
}

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidSpec(std::string("missing field '") + key + "'");
  return *it;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "kind") continue;
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw InvalidSpec("unknown field '" + it.key() + "'");
  }
}

}  // namespace

SymbolSpec symbol_from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("symbol must be a JSON object");
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "identity") {
    check_keys(j, {});
    return SymbolSpec::identity();
  }
  if (kind == "affine") {
    check_keys(j, {"scale", "offset"});
    cplx c = j.contains("offset") ? complex_from_json(j["offset"]) : cplx(0.0, 0.0);
    return SymbolSpec::affine(field(j, "scale").get<double>(), c);
  }
  if (kind == "lens") {
    check_keys(j, {"theta"});
    return SymbolSpec::lens(field(j, "theta").get<double>());
  }
  if (kind == "cusp") {
    check_keys(j, {});
    return SymbolSpec::cusp();
  }
  if (kind == "blaschke") {
    check_keys(j, {"zeros"});
    std::vector<cplx> zs;
    for (const auto& z : field(j, "zeros")) zs.push_back(complex_from_json(z));
    return SymbolSpec::blaschke(std::move(zs));
  }
  if (kind == "blaschke_interp") {
    check_keys(j, {"sigma", "eps1", "count"});
    return SymbolSpec::blaschke_interp(field(j, "sigma").get<double>(), field(j, "eps1").get<double>(),
                                       field(j, "count").get<int>());
  }
  if (kind == "outer_weight") {
    check_keys(j, {"theta"});
    return SymbolSpec::outer_weight(field(j, "theta").get<double>());
  }
  if (kind == "power") {
    check_keys(j, {"q"});
    return SymbolSpec::power(field(j, "q").get<int>());
  }
  if (kind == "halfshift") {
    check_keys(j, {});
    return SymbolSpec::halfshift();
  }
  if (kind == "compose") {
    check_keys(j, {"inner", "outer"});
    return SymbolSpec::compose(symbol_from_json(field(j, "inner")), symbol_from_json(field(j, "outer")));
  }
  if (kind == "product") {
    check_keys(j, {"left", "right"});
    return SymbolSpec::product(symbol_from_json(field(j, "left")), symbol_from_json(field(j, "right")));
  }
  if (kind == "scalar") {
    check_keys(j, {"c", "inner"});
    return SymbolSpec::scalar(complex_from_json(field(j, "c")), symbol_from_json(field(j, "inner")));
  }
  throw InvalidSpec("unknown symbol kind '" + kind + "'");
}

}  // namespace detail

std::string to_json(const SymbolSpec& spec) { return detail::symbol_to_json(spec).dump(); }

SymbolSpec symbol_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("symbol JSON: ") + e.what());
  }
  return detail::symbol_from_json(j);
}

}  // namespace opnum
