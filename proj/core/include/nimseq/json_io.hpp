#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "nimseq/optimize.hpp"
#include "nimseq/wythoff.hpp"

namespace nimseq {

using Json = nlohmann::json;

// Throws ValidationError whose index() is the byte offset of the syntax error.
Json parse_json(std::string_view text);

void to_json(Json& j, const ProblemInstance& inst);
void from_json(const Json& j, ProblemInstance& inst);
void to_json(Json& j, const PeriodCertificate& cert);
void from_json(const Json& j, PeriodCertificate& cert);
void to_json(Json& j, const CutRow& row);
void from_json(const Json& j, CutRow& row);
void to_json(Json& j, const MultiCut& mc);
void from_json(const Json& j, MultiCut& mc);
void to_json(Json& j, const BoundReport& report);
void to_json(Json& j, const DigraphSummary& summary);

// Typed readers that report shape errors as ValidationError.
ProblemInstance instance_from_json(const Json& j);
PeriodCertificate certificate_from_json(const Json& j);
CutPath path_from_json(const Json& j);

}  // namespace nimseq
