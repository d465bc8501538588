#include "forge/errors.hpp"

namespace forge {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Input: return "InputError";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::FrontierInconclusive: return "FrontierInconclusive";
        case ErrorKind::NotFFRT: return "NotFFRT";
        case ErrorKind::EigenCheckFailed: return "EigenCheckFailed";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
        case ErrorKind::WindowTooSmall: return "WindowTooSmall";
        case ErrorKind::ZeroDiscriminant: return "ZeroDiscriminant";
        case ErrorKind::PresentationIncomplete: return "PresentationIncomplete";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Error";
}

void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace forge
