#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "semichord/error.hpp"
#include "semichord/identity.hpp"

using namespace semichord;

namespace {

constexpr double pi = std::numbers::pi;

InscribedPolygon poly_deg(std::vector<double> degrees, double radius) {
    return vertices_from_angles(CentralAngles::from_degrees(degrees), radius);
}

InscribedPolygon poly_rad(std::vector<double> arcs, double radius) {
    return vertices_from_angles(CentralAngles::from_radians(std::move(arcs)), radius);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(RhsQuadrilateral, CounterexampleValuesSatisfyRelation) {
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
    EXPECT_NEAR(rhs_quadrilateral(s2, 3 + s5, 3 - s5, 4 * s2), 32.0, 1e-12 * 32);
}

TEST(RhsQuadrilateral, DegenerateAndHalfHexagon) {
    EXPECT_DOUBLE_EQ(rhs_quadrilateral(0, 3, 4, 5), 25.0);
    EXPECT_DOUBLE_EQ(rhs_quadrilateral(1, 1, 1, 2), 4.0);
}

TEST(RhsQuadrilateral, ExactlySymmetric) {
    oracle::Sampler rng(3);
    for (int t = 0; t < 200; ++t) {
        std::array<double, 3> s{rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5)};
        const double d = rng.uniform(5, 10);
        const double reference = rhs_quadrilateral(s[0], s[1], s[2], d);
        std::sort(s.begin(), s.end());
        do {
            EXPECT_EQ(rhs_quadrilateral(s[0], s[1], s[2], d), reference);
        } while (std::next_permutation(s.begin(), s.end()));
    }
}

TEST(RhsQuadrilateral, DomainErrors) {
    EXPECT_THROW((void)rhs_quadrilateral(1, 1, 1, 0), Error);
    EXPECT_THROW((void)rhs_quadrilateral(1, -1, 1, 2), Error);
    EXPECT_THROW((void)rhs_pentagon(1, 1, 1, 1, 0, 1, 1), Error);
    EXPECT_THROW((void)rhs_hexagon(1, 1, 1, 1, 1, -1, 1, 1, 1, 1), Error);
}

TEST(RhsPentagon, FigurePentagon) {
    const auto p = poly_deg({55, 55, 25, 45}, 4.0);
    const auto s = side_lengths(p);
    const double x = diagonal(p, 0, 2), y = diagonal(p, 2, 4);
    EXPECT_LE(rel(rhs_pentagon(s[0], s[1], s[2], s[3], 4.0, x, y), 64.0), 1e-10);
}

TEST(RhsPentagon, EqualArcs) {
    const auto p = poly_rad({pi / 4, pi / 4, pi / 4, pi / 4}, 1.0);
    const auto s = side_lengths(p);
    EXPECT_NEAR(rhs_pentagon(s[0], s[1], s[2], s[3], 1.0, diagonal(p, 0, 2), diagonal(p, 2, 4)), 4.0, 1e-12);
}

TEST(RhsPentagon, DisplayedFormWithoutFourthSquareIsInconsistent) {
    // the printed statement drops d^2; the coordinate oracle needs it
    const auto p = poly_deg({55, 55, 25, 45}, 4.0);
    const auto s = side_lengths(p);
    const double x = diagonal(p, 0, 2), y = diagonal(p, 2, 4);
    const double without = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + (s[0] * s[1] * y + x * s[2] * s[3]) / 4.0;
    EXPECT_GT(std::abs(without - 64.0), 1.0);
}

TEST(RhsPentagon, ReducesToQuadrilateralWhenFirstSideVanishes) {
    const auto p = poly_rad({0.0, 1.0, 0.9, pi - 1.9}, 2.5);
    const auto s = side_lengths(p);
    ASSERT_EQ(s[0], 0.0);
    const double x = diagonal(p, 0, 2);  // equals s[1] since A = B
    EXPECT_NEAR(rhs_pentagon(s[0], s[1], s[2], s[3], 2.5, x, diagonal(p, 2, 4)),
                rhs_quadrilateral(s[1], s[2], s[3], 5.0), 1e-13 * 25);
}

TEST(RhsHexagon, EqualArcsAndFigureHexagon) {
    auto check = [](const InscribedPolygon& p, double expected, double tol) {
        const auto s = side_lengths(p);
        const double x = diagonal(p, 3, 5), y = diagonal(p, 0, 2), z = diagonal(p, 2, 5), u = diagonal(p, 0, 3);
        EXPECT_LE(rel(rhs_hexagon(s[0], s[1], s[2], s[3], s[4], p.radius(), x, y, z, u), expected), tol);
    };
    check(poly_rad({pi / 5, pi / 5, pi / 5, pi / 5, pi / 5}, 1.0), 4.0, 1e-12);
    check(poly_deg({55, 23, 32, 25, 45}, 4.0), 64.0, 1e-10);
}

TEST(RhsHexagon, ReducesToPentagonWhenLastSideVanishes) {
    const auto hex = poly_rad({0.4, 0.7, 0.8, pi - 1.9, 0.0}, 3.0);
    const auto s = side_lengths(hex);
    ASSERT_LE(s[4], 1e-15);
    const double x = diagonal(hex, 3, 5), y = diagonal(hex, 0, 2), z = diagonal(hex, 2, 5), u = diagonal(hex, 0, 3);
    const double as_hexagon = rhs_hexagon(s[0], s[1], s[2], s[3], s[4], 3.0, x, y, z, u);
    const double as_pentagon = rhs_pentagon(s[0], s[1], s[2], s[3], 3.0, y, z);
    EXPECT_NEAR(as_hexagon, as_pentagon, 1e-13 * 36);
}

TEST(EvaluateGeneral, Triangle) {
    const auto r = evaluate_general(poly_rad({pi / 2, pi / 2}, 1.0));
    EXPECT_EQ(r.n, 3u);
    EXPECT_NEAR(r.lhs, 4.0, 1e-12);
    EXPECT_NEAR(r.rhs, 4.0, 1e-12);
    EXPECT_LE(r.residual_abs, 1e-12);
    EXPECT_TRUE(r.cross_terms.empty());
}

TEST(EvaluateGeneral, FigureQuadrilateral) {
    const auto p = poly_deg({55, 55, 70}, 4.0);
    const auto r = evaluate_general(p);
    EXPECT_LE(r.residual_rel, 1e-12);
    ASSERT_EQ(r.cross_terms.size(), 1u);
    const auto& t = r.cross_terms[0];
    EXPECT_EQ(t.k, 1u);
    const auto s = side_lengths(p);
    EXPECT_EQ(t.first_diagonal, s[0]);
    EXPECT_EQ(t.side, s[1]);
    EXPECT_EQ(t.second_diagonal, s[2]);
}

TEST(EvaluateGeneral, TwelveGonMatchesLongDoubleOracle) {
    oracle::Sampler rng(12);
    const auto arcs = rng.arcs(12);
    const auto r = evaluate_general(poly_rad(arcs, 7.0));
    EXPECT_LE(r.residual_rel, 1e-10);
    std::vector<long double> wide(arcs.begin(), arcs.end());
    EXPECT_LE(rel(r.rhs, static_cast<double>(oracle::general_rhs(wide, 7.0L))), 1e-12);
    EXPECT_EQ(r.cross_terms.size(), 9u);
}

TEST(EvaluateGeneral, ReportIsInternallyConsistent) {
    oracle::Sampler rng(5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform() * 20);
        const auto r = evaluate_general(poly_rad(rng.arcs(n), rng.uniform(0.1, 10)));
        ASSERT_EQ(r.cross_terms.size(), n - 3);
        double sum = 0.0;
        for (const auto& term : r.cross_terms) {
            EXPECT_GE(term.value, 0.0);
            sum += term.value;
        }
        EXPECT_LE(rel(r.sum_of_squares + 2.0 * sum / r.diameter, r.rhs), 1e-15);
        EXPECT_EQ(r.residual_rel, r.residual_abs / r.lhs);
    }
}

TEST(NestedQuadrilateral, EqualArcPentagon) {
    const auto p = poly_rad({pi / 4, pi / 4, pi / 4, pi / 4}, 1.0);
    for (std::size_t k : {1u, 2u}) {
        const auto r = nested_quadrilateral_check(p, k);
        EXPECT_LE(r.residual_abs, 1e-12);
        EXPECT_EQ(r.n, 4u);
        EXPECT_EQ(r.cross_terms.at(0).k, k);
    }
}

TEST(NestedQuadrilateral, QuadrilateralIsItsOwnNest) {
    const auto p = poly_deg({40, 80, 60}, 2.0);
    const auto nested = nested_quadrilateral_check(p, 1);
    const auto general = evaluate_general(p);
    EXPECT_EQ(nested.rhs, general.rhs);
    EXPECT_EQ(nested.lhs, general.lhs);
    EXPECT_EQ(nested.residual_abs, general.residual_abs);
}

TEST(NestedQuadrilateral, AgreesWithClosedForm) {
    const auto p = poly_deg({20, 30, 40, 50, 40}, 3.0);
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto r = nested_quadrilateral_check(p, k);
        const double closed = rhs_quadrilateral(diagonal(p, 0, k), diagonal(p, k, k + 1), diagonal(p, k + 1, 5), 6.0);
        EXPECT_LE(rel(r.rhs, closed), 1e-15);
    }
}

TEST(NestedQuadrilateral, IndexErrors) {
    const auto p = poly_rad({pi / 4, pi / 4, pi / 4, pi / 4}, 1.0);
    EXPECT_THROW((void)nested_quadrilateral_check(p, 0), Error);
    EXPECT_THROW((void)nested_quadrilateral_check(p, 3), Error);
    EXPECT_THROW((void)nested_quadrilateral_check(poly_rad({pi / 2, pi / 2}, 1.0), 1), Error);
}

TEST(InductionStep, HoldsForEveryConsecutivePair) {
    const auto p = poly_deg({10, 35, 50, 25, 60}, 1.7);
    for (std::size_t first = 0; first + 3 <= p.size(); ++first) {
        EXPECT_LE(induction_step_check(p, first).residual_rel, 1e-13);
    }
    EXPECT_EQ(induction_step_check(p).first, p.size() - 3);
    EXPECT_THROW((void)induction_step_check(p, p.size() - 2), Error);
    EXPECT_THROW((void)induction_step_check(poly_rad({pi / 2, pi / 2}, 1.0)), Error);
}

// Properties.

TEST(IdentityProperties, HoldsAcrossSizesAndScales) {
    oracle::Sampler rng(2024);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform() * 30);  // 3..32
        const double radius = std::pow(10.0, rng.uniform(-3, 3));
        const auto r = evaluate_general(poly_rad(rng.arcs(n), radius));
        ASSERT_LE(r.residual_rel, kIdentityTolerance) << "n=" << n << " R=" << radius;
    }
}

TEST(IdentityProperties, SpecialisesToClosedForms) {
    oracle::Sampler rng(99);
    for (int t = 0; t < 300; ++t) {
        const double radius = rng.uniform(0.5, 20);
        const auto q = poly_rad(rng.arcs(4), radius);
        const auto qs = side_lengths(q);
        EXPECT_LE(rel(evaluate_general(q).rhs, rhs_quadrilateral(qs[0], qs[1], qs[2], 2 * radius)), 1e-13);

        const auto p = poly_rad(rng.arcs(5), radius);
        const auto ps = side_lengths(p);
        EXPECT_LE(rel(evaluate_general(p).rhs,
                      rhs_pentagon(ps[0], ps[1], ps[2], ps[3], radius, diagonal(p, 0, 2), diagonal(p, 2, 4))),
                  1e-13);

        const auto h = poly_rad(rng.arcs(6), radius);
        const auto hs = side_lengths(h);
        EXPECT_LE(rel(evaluate_general(h).rhs,
                      rhs_hexagon(hs[0], hs[1], hs[2], hs[3], hs[4], radius, diagonal(h, 3, 5), diagonal(h, 0, 2),
                                  diagonal(h, 2, 5), diagonal(h, 0, 3))),
                  1e-13);
    }
}

TEST(IdentityProperties, AppendingZeroArcLeavesRhsUnchanged) {
    oracle::Sampler rng(31);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform() * 12);
        const double radius = rng.uniform(0.5, 20);
        auto arcs = rng.arcs(n);
        const double before = evaluate_general(poly_rad(arcs, radius)).rhs;
        arcs.push_back(0.0);
        EXPECT_LE(rel(evaluate_general(poly_rad(arcs, radius)).rhs, before), 1e-13);
        arcs.pop_back();
        arcs.insert(arcs.begin(), 0.0);
        EXPECT_LE(rel(evaluate_general(poly_rad(arcs, radius)).rhs, before), 1e-13);
    }
}

TEST(IdentityProperties, ScaleCovariance) {
    oracle::Sampler rng(77);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform() * 15);
        const auto arcs = rng.arcs(n);
        const double radius = rng.uniform(0.5, 5), s = rng.uniform(0.01, 100);
        const auto a = evaluate_general(poly_rad(arcs, radius));
        const auto b = evaluate_general(poly_rad(arcs, radius * s));
        EXPECT_LE(rel(b.lhs, a.lhs * s * s), 1e-12);
        EXPECT_LE(rel(b.rhs, a.rhs * s * s), 1e-12);
        EXPECT_LE(std::abs(b.residual_rel - a.residual_rel), 1e-14);
    }
}

TEST(IdentityProperties, InductionStepOnRandomPolygons) {
    oracle::Sampler rng(8);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 4 + static_cast<std::size_t>(rng.uniform() * 20);
        const auto p = poly_rad(rng.arcs(n), rng.uniform(0.1, 100));
        EXPECT_LE(induction_step_check(p).residual_rel, 1e-10);
    }
}
