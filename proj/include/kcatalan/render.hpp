#pragma once

#include "kcatalan/counting.hpp"
#include "kcatalan/oracle.hpp"
#include "kcatalan/periodicity.hpp"
#include "kcatalan/transfer.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

// JSON renderings. Exact integers are emitted as decimal strings.
namespace kcatalan {

using Json = nlohmann::ordered_json;

Json strings_of(const std::vector<Integer>& xs);
std::string to_string(TriangleKind kind);

/// {"k", "s", "states", "matrix"}
Json to_json(const TransferMatrix& system);
/// {"modulus", "vector_preperiod", "vector_period", "scalar_preperiod", "scalar_period",
///  "confirmed", "hypothesis"}
Json to_json(const PeriodReport& report, const std::optional<std::string>& hypothesis);
/// {"k", "kind", "values"}
Json to_json(const Triangle& triangle);
Json to_json(const oracle::BruteCount& count);
Json to_json(const oracle::CrossCheckReport& report);

}  // namespace kcatalan
