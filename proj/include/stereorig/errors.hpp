#pragma once

#include <stdexcept>
#include <string>

namespace stereorig {

/// Stable error categories; the CLI maps these to exit codes and
/// machine-readable error tags.
enum class ErrorCode {
    domain_error,      // argument outside the mathematical domain of an operation
    format_error,      // unsupported or malformed binary input (images)
    parse_error,       // malformed catalog/config text
    validation_error,  // inputs parse but violate a documented invariant
    infeasible_error,  // no design satisfies the active constraints
    io_error,          // filesystem failures
    internal_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error(ErrorCode::domain_error, m) {}
};
struct FormatError : Error {
    explicit FormatError(const std::string& m) : Error(ErrorCode::format_error, m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorCode::parse_error, m) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& m) : Error(ErrorCode::validation_error, m) {}
};
struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& m) : Error(ErrorCode::infeasible_error, m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorCode::io_error, m) {}
};

}  // namespace stereorig
