#pragma once

#include <map>
#include <string>

#include "augcat/classify.hpp"

namespace augcat {

// Deterministic, golden-stable renderings of the classification and of
// cohomology dimension maps.

std::string bch_text(const std::map<int, int>& dims);

std::string classes_text(const Dga& dga, const IsoClassification& c, bool include_audit);

// JSON mirror with stable key order; carries a `schema: 1` field.
std::string classes_json(const Dga& dga, const IsoClassification& c, bool include_audit);

}  // namespace augcat
