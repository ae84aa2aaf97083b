#pragma once

#include <cstddef>
#include <vector>

#include "semichord/geometry.hpp"

namespace semichord {

/// Default acceptance threshold for residual_rel on genuine inscriptions.
inline constexpr double kIdentityTolerance = 1e-10;

/// One summand of the correction sum, for the quadruple A1, A(k+1), A(k+2), An.
struct CrossTerm {
    std::size_t k = 0;
    double first_diagonal = 0.0;   // A1 A(k+1)
    double side = 0.0;             // A(k+1) A(k+2)
    double second_diagonal = 0.0;  // A(k+2) An
    double value = 0.0;            // product of the three
};

/// Both sides of d^2 = sum(sides^2) + 2 sum(cross terms) / d, with residuals.
struct IdentityReport {
    std::size_t n = 0;
    double diameter = 0.0;
    double lhs = 0.0;
    double sum_of_squares = 0.0;
    std::vector<CrossTerm> cross_terms;
    double rhs = 0.0;
    double residual_abs = 0.0;
    double residual_rel = 0.0;  // residual_abs / lhs
};

/// a^2 + b^2 + c^2 + 2abc/d. Exactly symmetric in (a, b, c).
[[nodiscard]] double rhs_quadrilateral(double a, double b, double c, double d);

/// a^2 + b^2 + c^2 + d^2 + (a b y + x c d) / R with x = AC, y = CE.
[[nodiscard]] double rhs_pentagon(double a, double b, double c, double d, double radius,
                                  double x, double y);

/// a^2 + ... + e^2 + (a b z + y c x + u d e) / R with x = DF, y = AC, z = CF, u = AD.
[[nodiscard]] double rhs_hexagon(double a, double b, double c, double d, double e, double radius,
                                 double x, double y, double z, double u);

/// General n-gon identity, sides and diagonals measured from coordinates.
[[nodiscard]] IdentityReport evaluate_general(const InscribedPolygon& poly);

/// The identity on the cyclic quadrilateral A1, A(k+1), A(k+2), An, 1 <= k <= n-3.
[[nodiscard]] IdentityReport nested_quadrilateral_check(const InscribedPolygon& poly, std::size_t k);

struct InductionStepReport {
    std::size_t first = 0;  // index of P; Q = first + 1, the far vertex is An
    double lhs = 0.0;       // |P An|^2
    double rhs = 0.0;       // |PQ|^2 + |Q An|^2 + 2 |PQ| |Q An| |A1 P| / |A1 An|
    double residual_abs = 0.0;
    double residual_rel = 0.0;  // against d^2
};

/// Law-of-Cosines step of the induction for consecutive P = A(first),
/// Q = A(first+1) and the far diameter endpoint. Requires first + 2 < n.
/// The default (first = n - 3) is the triangle used by the induction.
[[nodiscard]] InductionStepReport induction_step_check(const InscribedPolygon& poly);
[[nodiscard]] InductionStepReport induction_step_check(const InscribedPolygon& poly,
                                                       std::size_t first);

}  // namespace semichord
