#include "sic/serialize.hpp"

#include <stdexcept>

namespace sic {

nlohmann::json param_vector_to_json(const ParamVector& theta) {
    nlohmann::json j;
    j["kind"] =
        theta.source_class().kind == ModelKind::memoryless ? "memoryless" : "markov1";
    j["k"] = theta.k();
    j["rows"] = theta.rows();
    return j;
}

ParamVector param_vector_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const auto k = j.at("k").get<std::uint32_t>();
    auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
    if (kind == "memoryless") return ParamVector(SourceClass::memoryless(k), std::move(rows));
    if (kind == "markov1") return ParamVector(SourceClass::markov1(k), std::move(rows));
    throw std::invalid_argument("param_vector_from_json: unknown kind '" + kind + "'");
}

}  // namespace sic
