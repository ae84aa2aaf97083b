#include "semichord/commands.hpp"

#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "semichord/constructor.hpp"
#include "semichord/diameter.hpp"
#include "semichord/error.hpp"
#include "semichord/identity.hpp"
#include "semichord/svg.hpp"

namespace semichord::cli {

namespace {

std::string hex_state(std::uint64_t state) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%016" PRIx64, state);
    return buf;
}

std::string compact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

template <typename Body>
CommandResult run(std::string command, Body&& body) {
    CommandResult result;
    result.command = std::move(command);
    try {
        body(result);
    } catch (const Error& e) {
        result.status = Status::error;
        result.error_code = std::string(to_string(e.code()));
        result.message = e.what();
        result.payload = Json::object();
        result.summary = result.command + " failed: " + result.message;
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.error_code = "internal_error";
        result.message = e.what();
        result.payload = Json::object();
        result.summary = result.command + " failed: " + result.message;
    }
    return result;
}

Json polygon_json(const InscribedPolygon& poly) {
    Json vertices = Json::array();
    for (const Point& p : poly.vertices()) vertices.push_back(Json::array({p.x, p.y}));
    return Json{{"radius", poly.radius()}, {"n", poly.size()}, {"vertices", vertices},
                {"sides", side_lengths(poly)}};
}

Json identity_json(const IdentityReport& r) {
    Json terms = Json::array();
    for (const CrossTerm& t : r.cross_terms) {
        terms.push_back(Json{{"k", t.k},
                             {"first_diagonal", t.first_diagonal},
                             {"side", t.side},
                             {"second_diagonal", t.second_diagonal},
                             {"term_value", t.value}});
    }
    return Json{{"n", r.n},
                {"diameter", r.diameter},
                {"lhs", r.lhs},
                {"sum_of_squares", r.sum_of_squares},
                {"cross_terms", terms},
                {"rhs", r.rhs},
                {"residual_abs", r.residual_abs},
                {"residual_rel", r.residual_rel}};
}

Json solution_json(const DiameterSolution& s) {
    return Json{{"d", s.diameter},
                {"bracket_low", s.bracket_low},
                {"bracket_high", s.bracket_high},
                {"iterations", s.iterations},
                {"arc_sum_residual", s.arc_sum_residual}};
}

InscribedPolygon build_polygon(const PolygonInput& input, Json& payload) {
    if (input.kind == InputKind::arcs) {
        const CentralAngles angles = CentralAngles::from_degrees(input.values);
        payload["input"] = "arcs";
        payload["arcs_rad"] = std::vector<double>(angles.arcs().begin(), angles.arcs().end());
        return vertices_from_angles(angles, input.radius);
    }
    const DiameterSolution solution = solve_diameter(input.values);
    payload["input"] = "sides";
    payload["diameter_solution"] = solution_json(solution);
    return inscribe_on_diameter(input.values, solution.diameter);
}

Json failure_json(const FuzzFailure& f) {
    return Json{{"trial", f.trial}, {"state", hex_state(f.state)}, {"n", f.n},      {"radius", f.radius},
                {"check", f.check}, {"index", f.index},            {"residual", f.residual}};
}

Json fuzz_json(const FuzzReport& report) {
    const FuzzConfig& c = report.config;
    Json histogram = Json::object();
    for (const auto& [decade, count] : report.histogram) histogram["1e" + std::to_string(decade)] = count;
    Json failures = Json::array();
    for (const FuzzFailure& f : report.failures) failures.push_back(failure_json(f));
    Json worst_by_check = Json::object();
    for (const auto& [check, value] : report.worst_by_check) worst_by_check[check] = value;
    const FuzzCaseOutcome& w = report.worst_case;

    return Json{{"generator", report.generator},
                {"seed", c.seed},
                {"config",
                 {{"trials", c.trials},
                  {"n_min", c.n_min},
                  {"n_max", c.n_max},
                  {"radius_min", c.radius_min},
                  {"radius_max", c.radius_max},
                  {"tolerance_rel", c.tolerance_rel},
                  {"stress_probability", c.stress_probability}}},
                {"trials_run", report.trials_run},
                {"worst_residual_rel", report.worst_residual_rel},
                {"worst_case_seed_state", hex_state(w.state)},
                {"worst_case",
                 {{"trial", w.trial},
                  {"state", hex_state(w.state)},
                  {"n", w.n},
                  {"radius", w.radius},
                  {"stressed", w.stressed},
                  {"arcs", w.arcs}}},
                {"worst_by_check", worst_by_check},
                {"failures", failures},
                {"histogram", histogram}};
}

}  // namespace

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        double value = 0.0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || !std::isfinite(value)) {
            throw Error(ErrorCode::parse, "cannot parse '" + std::string(token) + "' as a number");
        }
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return values;
}

CommandResult cmd_verify(const PolygonInput& input) {
    return run("verify", [&](CommandResult& r) {
        const InscribedPolygon poly = build_polygon(input, r.payload);
        const IdentityReport report = evaluate_general(poly);
        r.payload["polygon"] = polygon_json(poly);
        r.payload["identity"] = identity_json(report);
        r.summary = "n=" + std::to_string(report.n) + " lhs=" + compact(report.lhs) +
                    " rhs=" + compact(report.rhs) + " residual_rel=" + compact(report.residual_rel);
    });
}

CommandResult cmd_solve(std::span<const double> sides) {
    return run("solve", [&](CommandResult& r) {
        const DiameterSolution s = solve_diameter(sides);
        r.payload = solution_json(s);
        std::vector<double> arcs;
        for (double a : sides) arcs.push_back(central_angle(a, s.diameter));
        r.payload["arcs_rad"] = arcs;
        r.summary = "d=" + compact(s.diameter) + " after " + std::to_string(s.iterations) + " iterations";
    });
}

CommandResult cmd_construct(std::span<const double> sides) {
    return run("construct", [&](CommandResult& r) {
        if (sides.size() != 3) {
            throw Error(ErrorCode::invalid_input, "construct takes exactly three sides");
        }
        const auto arrangements = enumerate_incongruent_quads(sides[0], sides[1], sides[2]);
        const double d = arrangements.front().diameter;
        Json list = Json::array();
        for (const QuadArrangement& q : arrangements) {
            list.push_back(Json{{"ordered_sides", q.ordered_sides},
                                {"middle_side", q.middle_side},
                                {"diameter", q.diameter},
                                {"diagonal_ac", diagonal(q.polygon, 0, 2)},
                                {"diagonal_bd", diagonal(q.polygon, 1, 3)},
                                {"residual_rel", evaluate_general(q.polygon).residual_rel},
                                {"polygon", polygon_json(q.polygon)}});
        }
        r.payload["diameter"] = d;
        r.payload["diameter_arc_sum"] = solve_diameter(sides).diameter;
        r.payload["count"] = arrangements.size();
        r.payload["arrangements"] = list;
        r.summary = std::to_string(arrangements.size()) + " incongruent quadrilateral(s) on d=" + compact(d);
    });
}

CommandResult cmd_counterexample() {
    return run("counterexample", [&](CommandResult& r) {
        const CounterexampleReport c = counterexample_report();
        auto point = [](Point p) { return Json::array({p.x, p.y}); };
        r.payload = Json{{"relation_holds", c.relation_holds},
                         {"relation_lhs", c.relation_lhs},
                         {"relation_rhs", c.relation_rhs},
                         {"relation_residual", c.relation_residual},
                         {"off_circle_distance", c.off_circle_distance},
                         {"inscribable_variant_d", c.inscribable_variant_d},
                         {"vertices", {{"A", point(c.a)}, {"B", point(c.b)}, {"C", point(c.c)}, {"D", point(c.d)}}}};
        r.summary = std::string("relation ") + (c.relation_holds ? "holds" : "fails") +
                    "; B is " + compact(c.off_circle_distance) + " off the circle on AD";
    });
}

CommandResult cmd_fuzz(const FuzzConfig& config) {
    return run("fuzz", [&](CommandResult& r) {
        const FuzzReport report = run_fuzz(config);
        r.payload = fuzz_json(report);
        r.summary = std::to_string(report.trials_run) + " trials, " + std::to_string(report.failures.size()) +
                    " failures, worst residual " + compact(report.worst_residual_rel);
    });
}

CommandResult cmd_render(const PolygonInput& input, const std::string& out_path) {
    return run("render", [&](CommandResult& r) {
        const InscribedPolygon poly = build_polygon(input, r.payload);
        const std::string svg = render_svg(poly);
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw Error(ErrorCode::io, "cannot open '" + out_path + "' for writing");
        file.write(svg.data(), static_cast<std::streamsize>(svg.size()));
        file.close();
        if (!file) throw Error(ErrorCode::io, "failed writing '" + out_path + "'");
        r.payload["path"] = out_path;
        r.payload["bytes"] = svg.size();
        r.payload["n"] = poly.size();
        r.payload["diagonals"] = figure_diagonals(poly.size()).size();
        r.summary = "wrote " + out_path;
    });
}

}  // namespace semichord::cli
