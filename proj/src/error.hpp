#pragma once

#include <stdexcept>
#include <string>

namespace longview {

enum class ErrorCode {
    invalid_argument,
    io,
    parse,
    validation,
    capacity,
    budget_exceeded,
    infeasible,
    internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::io: return "io";
    case ErrorCode::parse: return "parse";
    case ErrorCode::validation: return "validation";
    case ErrorCode::capacity: return "capacity";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace longview
