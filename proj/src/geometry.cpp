#include "semichord/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semichord/error.hpp"

namespace semichord {

namespace {

// Polar angle in [0, pi] for points on (or rounding-close to) the upper
// semicircle; -0.0 and tiny negative y map to the x axis.
double upper_angle(Point p) noexcept {
    const double y = std::max(p.y, 0.0) + 0.0;
    return std::atan2(y, p.x);
}

}  // namespace

double distance(Point p, Point q) noexcept { return std::hypot(q.x - p.x, q.y - p.y); }

double sum_arcs(std::span<const double> arcs) noexcept {
    double total = 0.0;
    for (double a : arcs) total += a;
    return total;
}

double degrees_to_radians(double degrees) noexcept { return degrees * (kPi / 180.0); }

CentralAngles CentralAngles::from_radians(std::vector<double> arcs) {
    if (arcs.size() < 2) {
        throw Error(ErrorCode::invalid_angles, "at least two central angles are required");
    }
    std::size_t positive = 0;
    for (double a : arcs) {
        if (!std::isfinite(a) || a < 0.0) {
            throw Error(ErrorCode::invalid_angles, "central angles must be finite and non-negative");
        }
        if (a > 0.0) ++positive;
    }
    if (positive < 2) {
        throw Error(ErrorCode::invalid_angles, "at least two central angles must be positive");
    }
    const double total = sum_arcs(arcs);
    if (std::abs(total - kPi) > kArcSumTolerance) {
        throw Error(ErrorCode::invalid_angles,
                    "central angles sum to " + std::to_string(total) + ", expected pi");
    }
    return CentralAngles(std::move(arcs));
}

CentralAngles CentralAngles::from_degrees(std::span<const double> degrees) {
    std::vector<double> arcs;
    arcs.reserve(degrees.size());
    for (double deg : degrees) arcs.push_back(degrees_to_radians(deg));
    return from_radians(std::move(arcs));
}

CentralAngles CentralAngles::reversed() const {
    return CentralAngles(std::vector<double>(arcs_.rbegin(), arcs_.rend()));
}

InscribedPolygon InscribedPolygon::create(double radius, std::vector<Point> vertices) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::domain, "radius must be positive and finite");
    }
    if (vertices.size() < 3) {
        throw Error(ErrorCode::invalid_polygon, "a semicircular polygon needs at least 3 vertices");
    }
    const double tol = kPlacementTolerance * radius;
    const Point first = vertices.front();
    const Point last = vertices.back();
    if (std::abs(first.x + radius) > tol || std::abs(first.y) > tol) {
        throw Error(ErrorCode::invalid_polygon, "first vertex must be (-R, 0)");
    }
    if (std::abs(last.x - radius) > tol || std::abs(last.y) > tol) {
        throw Error(ErrorCode::invalid_polygon, "last vertex must be (R, 0)");
    }
    double previous = kPi;
    for (const Point& p : vertices) {
        const double r2 = p.x * p.x + p.y * p.y;
        if (std::abs(r2 - radius * radius) > kPlacementTolerance * radius * radius) {
            throw Error(ErrorCode::invalid_polygon, "vertex is not on the circle");
        }
        if (p.y < -tol) {
            throw Error(ErrorCode::invalid_polygon, "vertex lies below the diameter");
        }
        const double angle = upper_angle(p);
        if (angle > previous + kPlacementTolerance) {
            throw Error(ErrorCode::invalid_polygon, "vertices are not in order from A1 to An");
        }
        previous = std::min(previous, angle);
    }
    return InscribedPolygon(radius, std::move(vertices));
}

InscribedPolygon InscribedPolygon::subpolygon(std::span<const std::size_t> indices) const {
    if (indices.size() < 3 || indices.front() != 0 || indices.back() != vertices_.size() - 1) {
        throw Error(ErrorCode::index, "subpolygon must keep both diameter endpoints");
    }
    std::vector<Point> picked;
    picked.reserve(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k > 0 && indices[k] <= indices[k - 1]) {
            throw Error(ErrorCode::index, "subpolygon indices must be strictly increasing");
        }
        picked.push_back(vertices_.at(indices[k]));
    }
    return InscribedPolygon(radius_, std::move(picked));
}

double chord_from_angle(double arc, double radius) {
    if (!(arc >= 0.0 && arc <= kPi)) {
        throw Error(ErrorCode::domain, "central angle must lie in [0, pi]");
    }
    if (!(radius > 0.0)) {
        throw Error(ErrorCode::domain, "radius must be positive");
    }
    return 2.0 * radius * std::sin(0.5 * arc);
}

InscribedPolygon vertices_from_angles(const CentralAngles& angles, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::domain, "radius must be positive and finite");
    }
    const auto arcs = angles.arcs();
    std::vector<Point> vertices;
    vertices.reserve(arcs.size() + 1);
    vertices.push_back({-radius, 0.0});
    double swept = 0.0;
    for (std::size_t k = 0; k + 1 < arcs.size(); ++k) {
        swept += arcs[k];
        // polar angle pi - swept
        vertices.push_back({-radius * std::cos(swept), radius * std::sin(swept)});
    }
    vertices.push_back({radius, 0.0});
    return InscribedPolygon::create(radius, std::move(vertices));
}

std::vector<double> side_lengths(const InscribedPolygon& poly) {
    const auto v = poly.vertices();
    std::vector<double> sides;
    sides.reserve(v.size() - 1);
    for (std::size_t k = 0; k + 1 < v.size(); ++k) sides.push_back(distance(v[k], v[k + 1]));
    return sides;
}

double diagonal(const InscribedPolygon& poly, std::size_t i, std::size_t j) {
    if (i >= j || j >= poly.size()) {
        throw Error(ErrorCode::index, "diagonal needs vertex indices i < j < n");
    }
    return distance(poly.vertex(i), poly.vertex(j));
}

ChordSet chord_set(const InscribedPolygon& poly) {
    ChordSet set{side_lengths(poly), poly.diameter()};
    // a measured chord can overshoot the diameter by rounding
    for (double& s : set.sides) s = std::min(s, set.diameter);
    return set;
}

}  // namespace semichord
