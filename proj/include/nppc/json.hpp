#pragma once

#include <json.hpp>

namespace nppc {

using Json = nlohmann::json;

}  // namespace nppc
