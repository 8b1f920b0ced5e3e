#pragma once

#include <json.hpp>

#include "uqgh/equitable.hpp"
#include "uqgh/hopf.hpp"
#include "uqgh/rep.hpp"

namespace uqgh {

// WeightModule as versioned JSON: dimension, basis labels, the eight action
// matrices with entries in the shared scalar grammar, optional weights.
// serialize -> parse is the identity.
nlohmann::json module_to_json(const WeightModule& m);
WeightModule module_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const HopfReport& r);
nlohmann::json report_to_json(const EqReport& r);

}  // namespace uqgh
