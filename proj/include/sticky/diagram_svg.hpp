#pragma once

// SVG rendering of a cumulative momentum diagram: the polyline through the
// P_k points, the lower envelope, and a marker per point.

#include "sticky/detail/svg.hpp"
#include "sticky/diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sticky {

struct DiagramSvgOptions {
    int width = 640;
    int height = 420;
    int margin = 48;
};

inline std::string diagram_svg(const ParticleSystem& system,
                               const DiagramSvgOptions& options = {}) {
    const MomentumDiagram diagram = build_momentum_diagram(system);
    const Envelope envelope = lower_convex_envelope(diagram);
    const std::vector<Point2>& pts = diagram.points;

    Rational y_min = pts.front().y;
    Rational y_max = pts.front().y;
    for (const Point2& p : pts) {
        if (p.y < y_min) {
            y_min = p.y;
        }
        if (p.y > y_max) {
            y_max = p.y;
        }
    }

    detail::SvgFrame frame(pts.front().x, pts.back().x, y_min, y_max, options.width,
                           options.height, options.margin);
    detail::SvgBuilder svg(options.width, options.height);

    // axes through the origin of the data window
    if (y_min <= 0 && 0 <= y_max) {
        svg.line(frame.x(pts.front().x), frame.y(Rational(0)), frame.x(pts.back().x),
                 frame.y(Rational(0)), "stroke=\"#cccccc\" stroke-width=\"1\"");
    }
    svg.line(frame.x(Rational(0)), frame.y(y_min), frame.x(Rational(0)), frame.y(y_max),
             "stroke=\"#cccccc\" stroke-width=\"1\"");

    std::vector<std::pair<std::string, std::string>> f_line;
    f_line.reserve(pts.size());
    for (const Point2& p : pts) {
        f_line.emplace_back(frame.x(p.x), frame.y(p.y));
    }
    svg.polyline(f_line, "fill=\"none\" stroke=\"#1f3b99\" stroke-width=\"2\"");

    std::vector<std::pair<std::string, std::string>> r_line;
    r_line.reserve(envelope.vertices.size());
    for (std::size_t v : envelope.vertices) {
        r_line.emplace_back(frame.x(pts[v].x), frame.y(pts[v].y));
    }
    svg.polyline(r_line, "fill=\"none\" stroke=\"#c22525\" stroke-width=\"2\"");

    for (const Point2& p : pts) {
        svg.circle(frame.x(p.x), frame.y(p.y), "3.5", "fill=\"#1f3b99\"");
    }

    return svg.finish();
}

} // namespace sticky
