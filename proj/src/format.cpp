#include <cmath>
#include <cstdio>
#include <string>

#include "semichord/commands.hpp"
#include "semichord/error.hpp"

namespace semichord::cli {

namespace {

std::string number(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string scalar(const Json& value) {
    switch (value.type()) {
        case Json::value_t::number_float: return number(value.get<double>());
        case Json::value_t::number_integer:
        case Json::value_t::number_unsigned:
        case Json::value_t::boolean:
        case Json::value_t::null:
        case Json::value_t::string: return value.dump();
        default: return {};
    }
}

void emit_json(const Json& value, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    if (value.is_object()) {
        if (value.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, item] : value.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(key).dump() + ": ";
            emit_json(item, depth + 1, out);
        }
        out += "\n" + close + "}";
    } else if (value.is_array()) {
        if (value.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (i > 0) out += ",\n";
            out += pad;
            emit_json(value[i], depth + 1, out);
        }
        out += "\n" + close + "]";
    } else {
        out += scalar(value);
    }
}

void emit_text(const Json& value, const std::string& path, std::string& out) {
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) emit_text(item, path.empty() ? key : path + "." + key, out);
    } else if (value.is_array()) {
        if (value.empty()) out += path + " = []\n";
        for (std::size_t i = 0; i < value.size(); ++i) emit_text(value[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        std::string s = value.is_string() ? value.get<std::string>() : scalar(value);
        if (value.is_number_float() && s.front() == '"') s = s.substr(1, s.size() - 2);
        out += path + " = " + s + "\n";
    }
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "text") return OutputFormat::text;
    throw Error(ErrorCode::parse, "unknown format '" + std::string(name) + "' (expected json or text)");
}

std::string format_result(const CommandResult& result, OutputFormat format) {
    Json doc = Json::object();
    doc["command"] = result.command;
    doc["status"] = result.status == Status::ok ? "ok" : "error";
    if (result.status == Status::error) {
        doc["error"] = {{"code", result.error_code}, {"message", result.message}};
    }
    doc["summary"] = result.summary;
    if (result.status == Status::ok) doc["payload"] = result.payload;

    std::string out;
    if (format == OutputFormat::json) {
        emit_json(doc, 0, out);
        out += "\n";
    } else {
        emit_text(doc, "", out);
    }
    return out;
}

}  // namespace semichord::cli
