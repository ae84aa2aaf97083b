#include "semichord/error.hpp"

namespace semichord {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::domain: return "domain_error";
        case ErrorCode::invalid_angles: return "invalid_angles";
        case ErrorCode::invalid_polygon: return "invalid_polygon";
        case ErrorCode::index: return "index_error";
        case ErrorCode::invalid_input: return "invalid_input";
        case ErrorCode::convergence: return "convergence_failure";
        case ErrorCode::placement: return "placement_error";
        case ErrorCode::parse: return "parse_error";
        case ErrorCode::io: return "io_error";
    }
    return "unknown";
}

}  // namespace semichord
