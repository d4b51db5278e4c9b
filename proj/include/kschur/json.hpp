#pragma once

#include <json.hpp>

#include "kschur/partition.hpp"

namespace kschur {

inline constexpr const char* kJsonSchema = "kschur/1";

// Partitions serialize as plain arrays, e.g. [5,5,4].
inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

}  // namespace kschur
