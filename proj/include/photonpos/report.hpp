#pragma once

// Report serialization. The structured format is JSON with fixed field names
// and ordering; two runs with the same config produce identical bytes.

#include <string>

#include "photonpos/verifier.hpp"

namespace photonpos {

std::string render_structured(const ReportDocument& doc);
std::string render_summary(const ReportDocument& doc);

}  // namespace photonpos
