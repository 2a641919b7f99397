#pragma once

#include <stdexcept>
#include <string>

namespace ribbons {

// Raised when an operation would exceed a documented size bound. The CLI
// maps this to its resource-limit exit code; bad input maps
// std::invalid_argument to the usage exit code.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ribbons
