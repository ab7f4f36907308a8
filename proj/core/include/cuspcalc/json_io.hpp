#pragma once

#include <json.hpp>

#include "cuspcalc/verifier.hpp"

namespace cuspcalc {

/// Exact "p/q" form (plain "p" when the denominator is 1); never decimal.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

nlohmann::json chain_to_json(const LinearChain& c);
LinearChain chain_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const CurveSpec& spec);
CurveSpec curve_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);

}  // namespace cuspcalc
