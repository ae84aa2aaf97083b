// semichord: command-line front end for the semicircle polygon library.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "semichord/commands.hpp"
#include "semichord/error.hpp"

using namespace semichord;
using namespace semichord::cli;

namespace {

struct PolygonArgs {
    std::string list;
    std::optional<double> radius;
    bool arcs = false;
    bool sides = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("values", list, "comma-separated sides, or central angles in degrees")->required();
        cmd->add_option("--radius,-r", radius, "circle radius; implies the list holds angles");
        cmd->add_flag("--arcs", arcs, "read the list as central angles in degrees");
        cmd->add_flag("--sides", sides, "read the list as side lengths");
    }

    [[nodiscard]] PolygonInput resolve() const {
        if (arcs && sides) throw Error(ErrorCode::parse, "--arcs and --sides are mutually exclusive");
        PolygonInput input;
        input.values = parse_list(list);
        input.kind = (arcs || (radius && !sides)) ? InputKind::arcs : InputKind::sides;
        input.radius = radius.value_or(1.0);
        return input;
    }
};

CommandResult parse_failure(const std::string& command, const Error& e) {
    CommandResult r;
    r.command = command;
    r.status = Status::error;
    r.error_code = std::string(to_string(e.code()));
    r.message = e.what();
    r.summary = command + " failed: " + r.message;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pythagoras-type identities for polygons inscribed in a semicircle"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "json";
    app.add_option("--format,-f", format_name, "output format: json or text")->capture_default_str();

    PolygonArgs verify_args;
    auto* verify = app.add_subcommand("verify", "evaluate the identity for a polygon");
    verify_args.attach(verify);

    std::string solve_list;
    auto* solve = app.add_subcommand("solve", "find the diameter that closes the given sides");
    solve->add_option("sides", solve_list, "comma-separated side lengths")->required();

    std::string construct_list;
    auto* construct = app.add_subcommand("construct", "enumerate the quadrilaterals on three sides");
    construct->add_option("sides", construct_list, "three comma-separated side lengths")->required();

    app.add_subcommand("counterexample", "quadrilateral satisfying the relation off the semicircle");

    FuzzConfig fuzz_config;
    auto* fuzz = app.add_subcommand("fuzz", "seeded randomized verification of all identities");
    fuzz->add_option("--trials,-t", fuzz_config.trials)->capture_default_str();
    fuzz->add_option("--seed,-s", fuzz_config.seed)->capture_default_str();
    fuzz->add_option("--n-min", fuzz_config.n_min)->capture_default_str();
    fuzz->add_option("--n-max", fuzz_config.n_max)->capture_default_str();
    fuzz->add_option("--radius-min", fuzz_config.radius_min)->capture_default_str();
    fuzz->add_option("--radius-max", fuzz_config.radius_max)->capture_default_str();
    fuzz->add_option("--tolerance", fuzz_config.tolerance_rel)->capture_default_str();
    fuzz->add_option("--stress", fuzz_config.stress_probability, "probability of a near-zero arc")
        ->capture_default_str();
    fuzz->add_option("--threads", fuzz_config.threads)->capture_default_str();

    PolygonArgs render_args;
    std::string out_path;
    auto* render = app.add_subcommand("render", "write an SVG figure of a polygon");
    render_args.attach(render);
    render->add_option("--out,-o", out_path, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    OutputFormat format = OutputFormat::json;
    try {
        format = parse_format(format_name);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    CommandResult result;
    try {
        if (name == "verify") {
            result = cmd_verify(verify_args.resolve());
        } else if (name == "solve") {
            result = cmd_solve(parse_list(solve_list));
        } else if (name == "construct") {
            result = cmd_construct(parse_list(construct_list));
        } else if (name == "counterexample") {
            result = cmd_counterexample();
        } else if (name == "fuzz") {
            result = cmd_fuzz(fuzz_config);
        } else {
            result = cmd_render(render_args.resolve(), out_path);
        }
    } catch (const Error& e) {
        result = parse_failure(name, e);
    }

    std::cout << format_result(result, format);
    return result.exit_code();
}
