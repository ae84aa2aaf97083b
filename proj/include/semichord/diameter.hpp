#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semichord/geometry.hpp"

namespace semichord {

/// Required |arc_sum(d) - pi| at the returned diameter. When one side almost
/// spans the diameter, arc_sum moves by more than this per ulp of d; the
/// solver then accepts a bracket a few ulps wide instead.
inline constexpr double kArcSumResidualTolerance = 1e-12;

/// Iteration cap shared by the bisection and Newton phases.
inline constexpr std::size_t kMaxSolverIterations = 200;

struct DiameterSolution {
    double diameter = 0.0;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    std::size_t iterations = 0;
    double arc_sum_residual = 0.0;
};

/// Central angle 2 asin(side / d) subtended by a chord on diameter d.
/// Ratios above 1 by no more than 1e-15 are clamped; larger ones throw.
[[nodiscard]] double central_angle(double side, double diameter);

/// Sum of central angles of all sides on diameter d; strictly decreasing in d.
[[nodiscard]] double arc_sum(double diameter, std::span<const double> sides);

/// The unique d with arc_sum(d, sides) = pi. Needs >= 2 strictly positive sides.
[[nodiscard]] DiameterSolution solve_diameter(std::span<const double> sides);

/// Places the sides consecutively on the semicircle of the given diameter.
/// Arc rounding up to 1e-9 rad is spread proportionally; beyond that the
/// sides do not inscribe on this diameter and Error(placement) is thrown.
[[nodiscard]] InscribedPolygon inscribe_on_diameter(std::span<const double> sides, double diameter);

[[nodiscard]] InscribedPolygon inscribe_from_sides(std::span<const double> sides);

}  // namespace semichord
