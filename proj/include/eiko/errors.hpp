#ifndef EIKO_ERRORS_HPP
#define EIKO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eiko {

/// Bad inputs: malformed files, invalid parameters, unusable geometry.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical contract was breached (unit-length violation, non-integer
/// winding, under-resolved loop, ...). The CLI maps this to exit code 3.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eiko

#endif
