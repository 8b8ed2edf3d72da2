#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

namespace bracketlab::cli {

/// Renders a command result for humans. Scalars print as "key: value";
/// arrays of objects print as aligned tables whose columns are the union
/// of the object keys.
void render_pretty(std::ostream& out, const nlohmann::json& doc);

}  // namespace bracketlab::cli
