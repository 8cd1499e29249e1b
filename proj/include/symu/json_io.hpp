#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "symu/goodness.hpp"
#include "symu/group.hpp"

namespace symu {

/// Group schema: {"label": str, "order": n, "table": [[int]],
/// "generators": [{"name": str, "index": int}]}. Index 0 must be the
/// identity; loading re-runs the full invariant audit.
nlohmann::json group_to_json(const Group& g);
Group group_from_json(const nlohmann::json& j);

Group load_group_file(const std::string& path);
void save_group_file(const Group& g, const std::string& path);

nlohmann::json goodness_to_json(const Group& g, const GoodnessReport& rep);
nlohmann::json classification_to_json(const ClassificationReport& rep);
nlohmann::json census_to_json(const UnitCensus& census);

}  // namespace symu
