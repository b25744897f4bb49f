#pragma once

#include <json.hpp>

#include "opnum/symbols.hpp"

namespace opnum::detail {

nlohmann::json complex_to_json(cplx c);
cplx complex_from_json(const nlohmann::json& j);
nlohmann::json symbol_to_json(const SymbolSpec& s);
SymbolSpec symbol_from_json(const nlohmann::json& j);

}  // namespace opnum::detail
