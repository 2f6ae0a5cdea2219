#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgd {

enum class ErrorCode {
    InvalidArgument,
    BranchPointHit,
    OriginPole,
    DegenerateRegime,
    FrontTooClose,
    WrongRegime,
    OutOfRange,
    PathAuditFailure,
    NonFiniteIntegrand,
    NonFiniteTransform,
    NotConverged,
    Overflow,
    UnsupportedPulse,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code says what went wrong.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace kgd
