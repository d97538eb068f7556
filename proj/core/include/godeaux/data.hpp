#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace godeaux::data {

// Contents of a bundled fixture file (copied from data/ at build time).
std::string_view file(std::string_view name);
std::vector<std::string_view> names();

}  // namespace godeaux::data
