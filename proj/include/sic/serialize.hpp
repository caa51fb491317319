#pragma once

#include <nlohmann/json.hpp>

#include "sic/sources.hpp"

namespace sic {

// {"kind": "memoryless"|"markov1", "k": int, "rows": [[...], ...]}
nlohmann::json param_vector_to_json(const ParamVector& theta);
ParamVector param_vector_from_json(const nlohmann::json& j);

}  // namespace sic
