#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semichord/fuzz.hpp"

namespace semichord::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, error };

struct CommandResult {
    std::string command;
    Status status = Status::ok;
    std::string error_code;  // set iff status == error
    std::string message;
    Json payload = Json::object();
    std::string summary;

    [[nodiscard]] int exit_code() const noexcept { return status == Status::ok ? 0 : 1; }
};

enum class OutputFormat { json, text };

/// "json" or "text"; throws Error(parse) otherwise.
OutputFormat parse_format(std::string_view name);

/// Comma-separated finite numbers; throws Error(parse).
std::vector<double> parse_list(std::string_view text);

enum class InputKind { sides, arcs };

/// A polygon given either by its short sides or by central angles in degrees.
struct PolygonInput {
    InputKind kind = InputKind::sides;
    std::vector<double> values;
    double radius = 1.0;
};

CommandResult cmd_verify(const PolygonInput& input);
CommandResult cmd_solve(std::span<const double> sides);
CommandResult cmd_construct(std::span<const double> sides);
CommandResult cmd_counterexample();
CommandResult cmd_fuzz(const FuzzConfig& config);
CommandResult cmd_render(const PolygonInput& input, const std::string& out_path);

/// Serialised document; numbers carry 15 significant digits.
std::string format_result(const CommandResult& result, OutputFormat format);

}  // namespace semichord::cli
