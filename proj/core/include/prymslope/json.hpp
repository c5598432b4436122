#pragma once

#include <nlohmann/json.hpp>

namespace prym {

/// Insertion-ordered JSON, so serialized keys follow basis and field order.
using Json = nlohmann::ordered_json;

}  // namespace prym
