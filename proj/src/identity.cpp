#include "semichord/identity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "semichord/error.hpp"

namespace semichord {

namespace {

void require_positive_scale(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorCode::domain, std::string(what) + " must be positive");
    }
}

void require_lengths(std::initializer_list<double> lengths) {
    for (double v : lengths) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw Error(ErrorCode::domain, "lengths must be finite and non-negative");
        }
    }
}

}  // namespace

double rhs_quadrilateral(double a, double b, double c, double d) {
    require_positive_scale(d, "diameter");
    require_lengths({a, b, c});
    std::array<double, 3> s{a, b, c};
    std::sort(s.begin(), s.end());
    return s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + 2.0 * (s[0] * s[1] * s[2]) / d;
}

double rhs_pentagon(double a, double b, double c, double d, double radius, double x, double y) {
    require_positive_scale(radius, "radius");
    require_lengths({a, b, c, d, x, y});
    return a * a + b * b + c * c + d * d + (a * b * y + x * c * d) / radius;
}

double rhs_hexagon(double a, double b, double c, double d, double e, double radius, double x,
                   double y, double z, double u) {
    require_positive_scale(radius, "radius");
    require_lengths({a, b, c, d, e, x, y, z, u});
    return a * a + b * b + c * c + d * d + e * e + (a * b * z + y * c * x + u * d * e) / radius;
}

IdentityReport evaluate_general(const InscribedPolygon& poly) {
    const std::size_t n = poly.size();
    const double d = diagonal(poly, 0, n - 1);
    const auto sides = side_lengths(poly);

    IdentityReport report;
    report.n = n;
    report.diameter = d;
    report.lhs = d * d;
    report.sum_of_squares =
        std::accumulate(sides.begin(), sides.end(), 0.0, [](double acc, double s) { return acc + s * s; });

    double cross_sum = 0.0;
    for (std::size_t k = 1; k + 3 <= n; ++k) {
        CrossTerm term;
        term.k = k;
        term.first_diagonal = diagonal(poly, 0, k);
        term.side = sides[k];
        term.second_diagonal = diagonal(poly, k + 1, n - 1);
        term.value = term.first_diagonal * term.side * term.second_diagonal;
        cross_sum += term.value;
        report.cross_terms.push_back(term);
    }
    report.rhs = report.sum_of_squares + 2.0 * cross_sum / d;
    report.residual_abs = std::abs(report.lhs - report.rhs);
    report.residual_rel = report.residual_abs / report.lhs;
    return report;
}

IdentityReport nested_quadrilateral_check(const InscribedPolygon& poly, std::size_t k) {
    const std::size_t n = poly.size();
    if (k < 1 || k + 3 > n) {
        throw Error(ErrorCode::index, "nested quadrilateral index must satisfy 1 <= k <= n-3");
    }
    const std::array<std::size_t, 4> quad{0, k, k + 1, n - 1};
    IdentityReport report = evaluate_general(poly.subpolygon(quad));
    report.cross_terms.front().k = k;
    return report;
}

InductionStepReport induction_step_check(const InscribedPolygon& poly) {
    if (poly.size() < 4) {
        throw Error(ErrorCode::index, "induction step needs at least 4 vertices");
    }
    return induction_step_check(poly, poly.size() - 3);
}

InductionStepReport induction_step_check(const InscribedPolygon& poly, std::size_t first) {
    const std::size_t n = poly.size();
    if (first + 2 >= n) {
        throw Error(ErrorCode::index, "induction step needs P and Q strictly before An");
    }
    const double pq = diagonal(poly, first, first + 1);
    const double q_far = diagonal(poly, first + 1, n - 1);
    const double p_far = diagonal(poly, first, n - 1);
    const double d = diagonal(poly, 0, n - 1);
    // cos of the angle at Q is -(A1 P)/(A1 An): Q and A1 subtend P..An from opposite arcs
    const double a1_p = first == 0 ? 0.0 : diagonal(poly, 0, first);

    InductionStepReport report;
    report.first = first;
    report.lhs = p_far * p_far;
    report.rhs = pq * pq + q_far * q_far + 2.0 * pq * q_far * a1_p / d;
    report.residual_abs = std::abs(report.lhs - report.rhs);
    report.residual_rel = report.residual_abs / (d * d);
    return report;
}

}  // namespace semichord
