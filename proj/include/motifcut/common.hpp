// Shared error types. The CLI maps them to exit codes:
// usage_error -> 2, resource_limit_error -> 3.
#pragma once

#include <stdexcept>
#include <string>

namespace motifcut {

struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace motifcut
