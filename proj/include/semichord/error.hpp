#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semichord {

enum class ErrorCode {
    domain,
    invalid_angles,
    invalid_polygon,
    index,
    invalid_input,
    convergence,
    placement,
    parse,
    io,
};

/// Stable machine-readable name, used in CLI error payloads.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown when the diameter iteration hits its cap; carries the last bracket.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, double low, double high)
        : Error(ErrorCode::convergence, message), low_(low), high_(high) {}

    [[nodiscard]] double bracket_low() const noexcept { return low_; }
    [[nodiscard]] double bracket_high() const noexcept { return high_; }

private:
    double low_;
    double high_;
};

}  // namespace semichord
