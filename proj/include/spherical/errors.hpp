#pragma once

#include <stdexcept>
#include <string>

namespace spherical {

/// Raised when a result contradicts an identity the library relies on
/// (dimension counts, reduction alignment). Bad input raises
/// std::invalid_argument instead.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace spherical
