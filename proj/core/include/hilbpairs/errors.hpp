#pragma once

#include <stdexcept>
#include <string>

namespace hilbpairs {

/// Thrown when a localization sum fails its internal proportionality check
/// or a weight multiset violates a convention it should satisfy by
/// construction. Signals a bug in integrand assembly, never bad user input.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hilbpairs
