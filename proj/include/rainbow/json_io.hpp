#pragma once

#include <json.hpp>

#include "rainbow/analysis.hpp"
#include "rainbow/constructions.hpp"

namespace rainbow {

/// {case, claimed_bound, colors_used, verified, coloring: [[u,v,k]...],
///  witness: {...}, lower_bound}. Objects keep keys sorted.
nlohmann::json certificate_to_json(const BoundCertificate& cert);

nlohmann::json witness_to_json(const CaseWitness& w);

/// Report fields, with `bridges` as a count and `bridge_edges` as pairs.
nlohmann::json analysis_to_json(const AnalysisReport& report);

}  // namespace rainbow
