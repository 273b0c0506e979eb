#pragma once

#include <stdexcept>
#include <string>

namespace wbal {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    IndexOutOfRange,
    TooFewNodes,
    MissingWeight,
    MissingBound,
    UnknownEdge,
    NonPositiveLowerBound,
    InvertedInterval,
    TooManyNodes,
    NotStronglyConnected,
    IterationBudgetExceeded,
    BadInitWeight,
    Diverged,
    DomainError,
    ZeroOutDegree,
    WrongKind,
    InfeasibleEdgeInterval,
    ConfigError,
    IoError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace wbal
