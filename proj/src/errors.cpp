#include "wbal/errors.hpp"

namespace wbal {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::MissingWeight: return "MissingWeight";
    case ErrorCode::MissingBound: return "MissingBound";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NonPositiveLowerBound: return "NonPositiveLowerBound";
    case ErrorCode::InvertedInterval: return "InvertedInterval";
    case ErrorCode::TooManyNodes: return "TooManyNodes";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorCode::BadInitWeight: return "BadInitWeight";
    case ErrorCode::Diverged: return "Diverged";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroOutDegree: return "ZeroOutDegree";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::InfeasibleEdgeInterval: return "InfeasibleEdgeInterval";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace wbal
