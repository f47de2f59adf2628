#pragma once

#include <stdexcept>
#include <string>

namespace owd {

// Single exception type for all library failures. The message always names
// the offending object/file so callers can surface it directly.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace owd
