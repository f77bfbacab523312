#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace alg2 {

/// One discrepancy between the classical reference tables this toolkit audits
/// and the computed results. Only entries where computation genuinely
/// contradicts the published text are recorded.
struct Erratum {
    std::string id;
    std::string claim;     // what the reference text states
    std::string computed;  // what exact computation yields
};

const std::vector<Erratum>& errata();
nlohmann::json errata_json();

}  // namespace alg2
