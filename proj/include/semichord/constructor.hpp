#pragma once

#include <array>
#include <vector>

#include "semichord/geometry.hpp"

namespace semichord {

/// Unique positive root of d^3 - (a^2 + b^2 + c^2) d - 2abc, i.e. the
/// diameter on which the three sides inscribe as a quadrilateral.
[[nodiscard]] double diameter_cubic(double a, double b, double c);

/// Places B with AB = a and C with BC = b on the semicircle of diameter d
/// and returns the measured CD. Throws Error(placement) if C would pass D.
[[nodiscard]] double lemma_cd(double a, double b, double d);

/// One circle ordering of three sides between the diameter endpoints.
struct QuadArrangement {
    std::array<double, 3> ordered_sides{};  // AB, BC, CD
    double diameter = 0.0;
    double middle_side = 0.0;  // BC, the side opposite the diameter
    InscribedPolygon polygon;
};

/// Incongruent quadrilaterals with sides {a, b, c} on their shared diameter:
/// 3 for distinct sides, 2 with one repeat, 1 when all equal.
[[nodiscard]] std::vector<QuadArrangement> enumerate_incongruent_quads(double a, double b, double c);

/// The planar quadrilateral with AD = 4 sqrt2, AB = sqrt2, BC = 3 + sqrt5,
/// CD = 3 - sqrt5 and a right angle at A.
struct CounterexampleReport {
    Point a, b, c, d;
    double relation_lhs = 0.0;
    double relation_rhs = 0.0;
    double relation_residual = 0.0;
    bool relation_holds = false;
    double off_circle_distance = 0.0;  // | |B O| - R | for the circle on AD
    double inscribable_variant_d = 0.0;
};

[[nodiscard]] CounterexampleReport counterexample_report();

}  // namespace semichord
