#include "stereorig/errors.hpp"

namespace stereorig {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::domain_error: return "domain_error";
        case ErrorCode::format_error: return "format_error";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::validation_error: return "validation_error";
        case ErrorCode::infeasible_error: return "infeasible_error";
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::internal_error: return "internal_error";
    }
    return "unknown_error";
}

}  // namespace stereorig
