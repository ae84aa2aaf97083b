#include "semichord/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semichord/diameter.hpp"
#include "semichord/error.hpp"
#include "semichord/identity.hpp"

namespace semichord {

namespace {

constexpr double kCongruenceTolerance = 1e-9;

}  // namespace

double diameter_cubic(double a, double b, double c) {
    for (double s : {a, b, c}) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw Error(ErrorCode::domain, "cubic needs three strictly positive sides");
        }
    }
    const double squares = a * a + b * b + c * c;
    const double product = 2.0 * a * b * c;
    auto cubic = [&](double d) { return (d * d - squares) * d - product; };
    auto slope = [&](double d) { return 3.0 * d * d - squares; };

    // cubic(max) = -max (s + t)^2 < 0 and cubic(a + b + c) = 2(a+b+c)(ab+bc+ca) - 2abc > 0
    double low = std::max({a, b, c});
    double high = a + b + c;
    for (int i = 0; i < 60 && high - low > 1e-6 * high; ++i) {
        const double mid = 0.5 * (low + high);
        (cubic(mid) < 0.0 ? low : high) = mid;
    }
    double d = 0.5 * (low + high);
    for (int i = 0; i < 100; ++i) {
        const double f = cubic(d);
        if (f == 0.0) break;
        (f < 0.0 ? low : high) = d;
        double next = d - f / slope(d);
        if (!(next > low && next < high)) next = 0.5 * (low + high);
        const double step = std::abs(next - d);
        d = next;
        if (step <= 2.0 * std::numeric_limits<double>::epsilon() * d) break;
    }
    return d;
}

double lemma_cd(double a, double b, double d) {
    if (!(d > 0.0) || !(a > 0.0) || !(b > 0.0) || a >= d || b >= d) {
        throw Error(ErrorCode::domain, "lemma placement needs 0 < a, b < d");
    }
    const double to_b = central_angle(a, d);
    const double to_c = central_angle(b, d);
    double rest = kPi - to_b - to_c;
    if (rest < -kArcSumTolerance) {
        throw Error(ErrorCode::placement, "C would leave the semicircle past D");
    }
    rest = std::max(rest, 0.0);
    const auto quad = vertices_from_angles(CentralAngles::from_radians({to_b, to_c, rest}), 0.5 * d);
    return diagonal(quad, 2, 3);
}

std::vector<QuadArrangement> enumerate_incongruent_quads(double a, double b, double c) {
    const double d = diameter_cubic(a, b, c);
    const std::array<double, 3> input{a, b, c};

    std::vector<QuadArrangement> out;
    std::vector<std::array<double, 2>> seen;
    for (std::size_t m = 0; m < 3; ++m) {
        double outer_first = input[(m + 1) % 3];
        double outer_last = input[(m + 2) % 3];
        if (outer_first > outer_last) std::swap(outer_first, outer_last);
        const std::array<double, 3> ordered{outer_first, input[m], outer_last};

        InscribedPolygon polygon = inscribe_on_diameter(ordered, d);
        std::array<double, 2> diagonals{diagonal(polygon, 0, 2), diagonal(polygon, 1, 3)};
        std::sort(diagonals.begin(), diagonals.end());

        const bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const auto& other) {
            return std::abs(other[0] - diagonals[0]) <= kCongruenceTolerance * d &&
                   std::abs(other[1] - diagonals[1]) <= kCongruenceTolerance * d;
        });
        if (duplicate) continue;
        seen.push_back(diagonals);
        out.push_back(QuadArrangement{ordered, d, input[m], std::move(polygon)});
    }
    return out;
}

CounterexampleReport counterexample_report() {
    const double sqrt2 = std::sqrt(2.0);
    const double sqrt5 = std::sqrt(5.0);
    const double ad = 4.0 * sqrt2;
    const double ab = sqrt2;
    const double bc = 3.0 + sqrt5;
    const double cd = 3.0 - sqrt5;

    CounterexampleReport report;
    report.a = {0.0, 0.0};
    report.d = {ad, 0.0};
    report.b = {0.0, ab};  // right angle at A

    // C: intersection of circle(B, BC) and circle(D, CD), upper half-plane
    const double dx = report.d.x - report.b.x;
    const double dy = report.d.y - report.b.y;
    const double bd = std::hypot(dx, dy);
    const double along = (bc * bc - cd * cd + bd * bd) / (2.0 * bd);
    const double across = std::sqrt(std::max(bc * bc - along * along, 0.0));
    const double fx = report.b.x + along * dx / bd;
    const double fy = report.b.y + along * dy / bd;
    const Point left{fx - across * dy / bd, fy + across * dx / bd};
    const Point right{fx + across * dy / bd, fy - across * dx / bd};
    report.c = left.y >= right.y ? left : right;

    const double side_ab = distance(report.a, report.b);
    const double side_bc = distance(report.b, report.c);
    const double side_cd = distance(report.c, report.d);
    const double side_ad = distance(report.a, report.d);
    report.relation_lhs = side_ad * side_ad;
    report.relation_rhs = rhs_quadrilateral(side_ab, side_bc, side_cd, side_ad);
    report.relation_residual = std::abs(report.relation_lhs - report.relation_rhs);
    report.relation_holds = report.relation_residual <= 1e-12 * report.relation_lhs;

    const Point centre{0.5 * ad, 0.0};
    report.off_circle_distance = std::abs(distance(report.b, centre) - 0.5 * ad);
    report.inscribable_variant_d = diameter_cubic(ab, bc, cd);
    return report;
}

}  // namespace semichord
