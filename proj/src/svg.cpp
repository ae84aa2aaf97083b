#include "semichord/svg.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <string_view>

namespace semichord {

namespace {

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string vertex_name(std::size_t i, std::size_t n) {
    if (n <= 26) return std::string(1, static_cast<char>('A' + i));
    return "A" + std::to_string(i + 1);
}

std::string side_name(std::size_t i, std::size_t count) {
    if (count <= 25) return std::string(1, static_cast<char>('a' + i));
    return "s" + std::to_string(i + 1);
}

class Canvas {
public:
    explicit Canvas(double radius)
        : scale_((SvgLayout::kWidth - 2.0 * SvgLayout::kMargin) / (2.0 * radius)) {}

    [[nodiscard]] double px(Point p) const { return centre_x_ + p.x * scale_; }
    [[nodiscard]] double py(Point p) const { return centre_y_ - p.y * scale_; }
    [[nodiscard]] double pixel_radius() const { return centre_x_ - SvgLayout::kMargin; }
    [[nodiscard]] double centre_y() const { return centre_y_; }

    void line(Point p, Point q, std::string_view style) {
        out_ += "    <line x1=\"" + fixed(px(p)) + "\" y1=\"" + fixed(py(p)) + "\" x2=\"" + fixed(px(q)) +
                "\" y2=\"" + fixed(py(q)) + "\" " + std::string(style) + "/>\n";
    }

    void text(double x, double y, std::string_view anchor, std::string_view body) {
        out_ += "    <text x=\"" + fixed(x) + "\" y=\"" + fixed(y) + "\" text-anchor=\"" + std::string(anchor) +
                "\">" + std::string(body) + "</text>\n";
    }

    void raw(std::string_view s) { out_ += s; }
    [[nodiscard]] const std::string& str() const { return out_; }

private:
    double scale_;
    double centre_x_ = SvgLayout::kWidth / 2.0;
    double centre_y_ = SvgLayout::kHeight - SvgLayout::kMargin;
    std::string out_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> figure_diagonals(std::size_t n) {
    if (n == 4) return {{0, 2}, {1, 3}};
    std::set<std::pair<std::size_t, std::size_t>> chords;
    for (std::size_t k = 1; k + 3 <= n; ++k) {
        if (k >= 2) chords.insert({0, k});
        if (k + 1 <= n - 3) chords.insert({k + 1, n - 1});
    }
    return {chords.begin(), chords.end()};
}

std::string render_svg(const InscribedPolygon& poly) {
    const std::size_t n = poly.size();
    const auto v = poly.vertices();
    Canvas c(poly.radius());

    c.raw("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    c.raw("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"450\" "
          "viewBox=\"0 0 800 450\">\n");
    c.raw("  <rect x=\"0\" y=\"0\" width=\"800\" height=\"450\" fill=\"white\"/>\n");

    const double r = c.pixel_radius();
    c.raw("  <path id=\"semicircle\" d=\"M " + fixed(SvgLayout::kMargin) + " " + fixed(c.centre_y()) + " A " +
          fixed(r) + " " + fixed(r) + " 0 0 1 " + fixed(SvgLayout::kWidth - SvgLayout::kMargin) + " " +
          fixed(c.centre_y()) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n");

    c.raw("  <g id=\"diameter\" font-family=\"serif\" font-size=\"14\">\n");
    c.line(v.front(), v.back(), "stroke=\"black\" stroke-width=\"1.5\"");
    c.text(c.px({0.0, 0.0}), c.centre_y() - 6.0, "middle", "2R = " + short_number(poly.diameter()));
    c.raw("  </g>\n");

    c.raw("  <g id=\"sides\" font-family=\"serif\" font-size=\"14\">\n");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        c.line(v[i], v[i + 1], "stroke=\"black\" stroke-width=\"1.5\"");
        const Point mid{0.5 * (v[i].x + v[i + 1].x), 0.5 * (v[i].y + v[i + 1].y)};
        const double len = std::hypot(mid.x, mid.y);
        // push the label outward along the radius through the midpoint
        const double ox = len > 0.0 ? mid.x / len : 0.0;
        const double oy = len > 0.0 ? mid.y / len : 1.0;
        c.text(c.px(mid) + 16.0 * ox, c.py(mid) - 16.0 * oy, "middle",
               side_name(i, n - 1) + " = " + short_number(distance(v[i], v[i + 1])));
    }
    c.raw("  </g>\n");

    c.raw("  <g id=\"diagonals\" font-family=\"serif\" font-size=\"12\" fill=\"#555555\">\n");
    for (const auto& [i, j] : figure_diagonals(n)) {
        c.line(v[i], v[j], "stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");
        const Point mid{0.5 * (v[i].x + v[j].x), 0.5 * (v[i].y + v[j].y)};
        c.text(c.px(mid), c.py(mid) + 14.0, "middle",
               vertex_name(i, n) + vertex_name(j, n) + " = " + short_number(distance(v[i], v[j])));
    }
    c.raw("  </g>\n");

    c.raw("  <g id=\"vertices\" font-family=\"serif\" font-size=\"16\">\n");
    for (std::size_t i = 0; i < n; ++i) {
        c.raw("    <circle cx=\"" + fixed(c.px(v[i])) + "\" cy=\"" + fixed(c.py(v[i])) +
              "\" r=\"3\" fill=\"black\"/>\n");
        const bool on_axis = i == 0 || i + 1 == n;
        c.text(c.px(v[i]), on_axis ? c.py(v[i]) + 20.0 : c.py(v[i]) - 10.0, "middle", vertex_name(i, n));
    }
    c.raw("  </g>\n");
    c.raw("</svg>\n");
    return c.str();
}

}  // namespace semichord
