#pragma once

#include <stdexcept>
#include <string>

namespace secant {

/// Thrown when an input exceeds the desk-scale limits this toolkit is built
/// for (huge enumeration ranges, oversized exponents, ...). The CLI maps it
/// to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace secant
