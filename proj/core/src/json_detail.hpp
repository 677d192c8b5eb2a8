#pragma once

#include <nlohmann/json.hpp>

#include "novikov/magma.hpp"

namespace novikov::detail {

using nlohmann::json;

json tree_json(const Tree& t);
Tree tree_from(const json& j);
json poly_json(const TreePoly& f);
TreePoly poly_from(const json& j);
json parse_json(std::string_view text);

} // namespace novikov::detail
