#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semichord/geometry.hpp"

namespace semichord {

struct SvgLayout {
    static constexpr double kWidth = 800.0;
    static constexpr double kHeight = 450.0;
    static constexpr double kMargin = 40.0;
};

/// Vertex index pairs drawn as diagonals: the non-side chords of the cross
/// terms, or AC and BD for a quadrilateral.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> figure_diagonals(std::size_t n);

/// SVG 1.1 figure: semicircle, polygon edges, cross-term diagonals and length
/// labels. Output depends only on the polygon.
[[nodiscard]] std::string render_svg(const InscribedPolygon& poly);

}  // namespace semichord
