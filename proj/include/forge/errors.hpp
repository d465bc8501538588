#pragma once

#include <stdexcept>
#include <string>

namespace forge {

/// Failure categories. The CLI maps them onto exit codes.
enum class ErrorKind {
    Input,
    BudgetExceeded,
    FrontierInconclusive,
    NotFFRT,
    EigenCheckFailed,
    NotPrimitive,
    NonIntegralMultiplicity,
    WindowTooSmall,
    ZeroDiscriminant,
    PresentationIncomplete,
    InvariantViolation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace forge
