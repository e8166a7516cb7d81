#pragma once

#include <stdexcept>
#include <string>

namespace tdl {

enum class ErrorKind {
    GraphDisconnected,
    ThresholdExceedsMinDegree,
    InvalidNode,
    CapExceeded,
    DimensionMismatch,
    EmptySet,
    NoSolution,
    InvalidParams,
    PreconditionUnmet,
    InvalidGraphFile,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::GraphDisconnected: return "GraphDisconnected";
        case ErrorKind::ThresholdExceedsMinDegree: return "ThresholdExceedsMinDegree";
        case ErrorKind::InvalidNode: return "InvalidNode";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
        case ErrorKind::InvalidGraphFile: return "InvalidGraphFile";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace tdl
