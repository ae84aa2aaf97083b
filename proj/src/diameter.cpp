#include "semichord/diameter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "semichord/error.hpp"

namespace semichord {

namespace {

constexpr double kRatioSlack = 1e-15;
constexpr double kArcSpreadLimit = 1e-9;

void validate_sides(std::span<const double> sides) {
    if (sides.size() < 2) {
        throw Error(ErrorCode::invalid_input, "at least two sides are required");
    }
    for (double s : sides) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw Error(ErrorCode::invalid_input, "sides must be finite and strictly positive");
        }
    }
}

// d/dd of arc_sum; always negative for d > max(sides)
double arc_sum_derivative(double d, std::span<const double> sides) {
    double total = 0.0;
    for (double a : sides) {
        const double gap = std::max((d - a) * (d + a), 0.0);
        total -= 2.0 * a / (d * std::sqrt(gap));
    }
    return total;
}

}  // namespace

double central_angle(double side, double diameter) {
    if (!(diameter > 0.0) || !(side >= 0.0)) {
        throw Error(ErrorCode::domain, "central angle needs side >= 0 and diameter > 0");
    }
    const double ratio = side / diameter;
    if (ratio > 1.0 + kRatioSlack) {
        throw Error(ErrorCode::domain, "chord longer than the diameter");
    }
    if (ratio <= 0.5) return 2.0 * std::asin(ratio);
    // asin near 1 magnifies rounding in the ratio; use the complementary half-angle
    const double gap = std::max(diameter - side, 0.0);
    return kPi - 4.0 * std::asin(std::sqrt(gap / (2.0 * diameter)));
}

double arc_sum(double diameter, std::span<const double> sides) {
    if (sides.empty()) return 0.0;
    const double longest = *std::max_element(sides.begin(), sides.end());
    if (!(diameter > 0.0) || diameter * (1.0 + kRatioSlack) < longest) {
        throw Error(ErrorCode::domain, "diameter is shorter than the longest side");
    }
    double total = 0.0;
    for (double a : sides) total += central_angle(a, diameter);
    return total;
}

DiameterSolution solve_diameter(std::span<const double> input) {
    validate_sides(input);
    std::vector<double> sides(input.begin(), input.end());
    // fixed summation order makes the result independent of input order
    std::sort(sides.begin(), sides.end());

    const double longest = sides.back();
    double low = longest;
    double high = 0.0;
    for (double s : sides) high += s;

    auto excess = [&](double d) { return arc_sum(d, sides) - kPi; };

    std::size_t iterations = 0;
    const double switch_width = 1e-3 * longest;
    while (high - low > switch_width && iterations < kMaxSolverIterations) {
        const double mid = 0.5 * (low + high);
        ++iterations;
        if (excess(mid) > 0.0) {
            low = mid;
        } else {
            high = mid;
        }
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double d = 0.5 * (low + high);
    double f = excess(d);
    while (iterations < kMaxSolverIterations && f != 0.0) {
        ++iterations;
        if (f > 0.0) {
            low = d;
        } else {
            high = d;
        }
        if (high - low <= 4.0 * eps * high) break;
        double next = d - f / arc_sum_derivative(d, sides);
        if (!(next > low && next < high)) next = 0.5 * (low + high);
        // a stalled Newton step short of the tolerance falls back to bisection
        if (std::abs(next - d) <= 2.0 * eps * d) {
            if (std::abs(f) <= kArcSumResidualTolerance) break;
            next = 0.5 * (low + high);
        }
        d = next;
        f = excess(d);
    }

    const double residual = std::abs(f);
    // Near d = max(sides) one ulp of d can move arc_sum by more than the
    // tolerance; an ulp-tight bracket then pins the root to machine precision.
    const bool pinned = high - low <= 8.0 * eps * high;
    if (residual > kArcSumResidualTolerance && !pinned) {
        throw ConvergenceError("diameter iteration did not converge (residual " +
                                   std::to_string(residual) + ")",
                               low, high);
    }
    low = std::min(low, d);
    high = std::max(high, d);
    return DiameterSolution{d, low, high, iterations, residual};
}

InscribedPolygon inscribe_on_diameter(std::span<const double> sides, double diameter) {
    std::vector<double> arcs;
    arcs.reserve(sides.size());
    for (double s : sides) arcs.push_back(central_angle(s, diameter));
    const double total = sum_arcs(arcs);
    if (std::abs(total - kPi) > kArcSpreadLimit) {
        throw Error(ErrorCode::placement, "sides do not close the semicircle on this diameter");
    }
    if (std::abs(total - kPi) > kArcSumTolerance) {
        const double scale = kPi / total;
        for (double& a : arcs) a *= scale;
    }
    return vertices_from_angles(CentralAngles::from_radians(std::move(arcs)), 0.5 * diameter);
}

InscribedPolygon inscribe_from_sides(std::span<const double> sides) {
    const DiameterSolution solution = solve_diameter(sides);
    return inscribe_on_diameter(sides, solution.diameter);
}

}  // namespace semichord
