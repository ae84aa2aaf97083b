#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace semichord {

inline constexpr double kPi = std::numbers::pi;

/// Absolute tolerance on the sum of central angles.
inline constexpr double kArcSumTolerance = 1e-12;

/// Relative (to R, or R² where squared) tolerance on vertex placement.
inline constexpr double kPlacementTolerance = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

[[nodiscard]] double distance(Point p, Point q) noexcept;

/// Left-to-right sum; every arc total in the library goes through here so
/// that arcs produced by one module validate identically in another.
[[nodiscard]] double sum_arcs(std::span<const double> arcs) noexcept;

double degrees_to_radians(double degrees) noexcept;

/// A partition of the half-turn into n-1 non-negative central angles,
/// listed from the A1 end of the diameter towards An.
class CentralAngles {
public:
    /// Throws Error(invalid_angles) unless every arc is >= 0, the total is
    /// pi within kArcSumTolerance and at least two arcs are positive.
    static CentralAngles from_radians(std::vector<double> arcs);
    static CentralAngles from_degrees(std::span<const double> degrees);

    [[nodiscard]] std::span<const double> arcs() const noexcept { return arcs_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return arcs_.size() + 1; }

    /// Mirror image: arcs in reverse order.
    [[nodiscard]] CentralAngles reversed() const;

private:
    explicit CentralAngles(std::vector<double> arcs) : arcs_(std::move(arcs)) {}

    std::vector<double> arcs_;
};

/// Vertices on the upper semicircle of radius R centred at the origin,
/// A1 = (-R, 0) first and An = (R, 0) last.
class InscribedPolygon {
public:
    /// Validates the semicircle invariants; throws Error(invalid_polygon).
    static InscribedPolygon create(double radius, std::vector<Point> vertices);

    [[nodiscard]] double radius() const noexcept { return radius_; }
    [[nodiscard]] double diameter() const noexcept { return 2.0 * radius_; }
    [[nodiscard]] std::span<const Point> vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] Point vertex(std::size_t i) const { return vertices_.at(i); }

    /// Polygon on the vertex subsequence `indices` (strictly increasing,
    /// first 0 and last size()-1). Used for nested quadrilaterals.
    [[nodiscard]] InscribedPolygon subpolygon(std::span<const std::size_t> indices) const;

private:
    InscribedPolygon(double radius, std::vector<Point> vertices)
        : radius_(radius), vertices_(std::move(vertices)) {}

    double radius_;
    std::vector<Point> vertices_;
};

/// Metric data only: the n-1 short sides and the diameter they inscribe in.
struct ChordSet {
    std::vector<double> sides;
    double diameter = 0.0;
};

/// 2R sin(arc/2). Throws Error(domain) for arc outside [0, pi] or R <= 0.
[[nodiscard]] double chord_from_angle(double arc, double radius);

[[nodiscard]] InscribedPolygon vertices_from_angles(const CentralAngles& angles, double radius);

[[nodiscard]] std::vector<double> side_lengths(const InscribedPolygon& poly);

/// Distance between vertices i < j. Throws Error(index) otherwise.
[[nodiscard]] double diagonal(const InscribedPolygon& poly, std::size_t i, std::size_t j);

[[nodiscard]] ChordSet chord_set(const InscribedPolygon& poly);

}  // namespace semichord
