#ifndef DETSIEVE_ERRORS_HPP
#define DETSIEVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace detsieve {

// Error taxonomy shared by the library and the CLI exit codes:
// usage/spec/structure/contract -> 2, parse -> 3, capacity -> 4.

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SpecError : UsageError {
    explicit SpecError(const std::string& msg) : UsageError(msg) {}
};

struct StructureError : UsageError {
    explicit StructureError(const std::string& msg) : UsageError(msg) {}
};

struct ContractError : UsageError {
    explicit ContractError(const std::string& msg) : UsageError(msg) {}
};

struct UnsupportedError : UsageError {
    explicit UnsupportedError(const std::string& msg) : UsageError(msg) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace detsieve

#endif
