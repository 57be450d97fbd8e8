#pragma once

// Minimal deterministic SVG emission. Coordinates are mapped from exact
// rationals and rendered with a fixed number of decimals, so identical
// inputs always produce byte-identical documents.

#include "sticky/numeric.hpp"

#include <string>
#include <vector>

namespace sticky::detail {

// Affine map from a rational data window to pixel space (y axis flipped).
class SvgFrame {
public:
    SvgFrame(Rational x_min, Rational x_max, Rational y_min, Rational y_max, int width,
             int height, int margin)
        : x_min_(std::move(x_min)), y_max_(std::move(y_max)), width_(width), height_(height) {
        Rational x_span = x_max - x_min_;
        Rational y_span = y_max_ - y_min;
        if (x_span == 0) { // degenerate window: pad by one unit each side
            x_min_ -= 1;
            x_span = 2;
        }
        if (y_span == 0) {
            y_max_ += 1;
            y_span = 2;
        }
        x_scale_ = Rational(width - 2 * margin) / x_span;
        y_scale_ = Rational(height - 2 * margin) / y_span;
        margin_ = margin;
    }

    std::string x(const Rational& v) const {
        return format_decimal(Rational(margin_) + (v - x_min_) * x_scale_, 3);
    }
    std::string y(const Rational& v) const {
        return format_decimal(Rational(margin_) + (y_max_ - v) * y_scale_, 3);
    }
    int width() const { return width_; }
    int height() const { return height_; }

private:
    Rational x_min_;
    Rational y_max_;
    Rational x_scale_;
    Rational y_scale_;
    int width_;
    int height_;
    int margin_ = 0;
};

class SvgBuilder {
public:
    SvgBuilder(int width, int height) {
        body_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                 std::to_string(width) + "\" height=\"" + std::to_string(height) +
                 "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
                 "\">\n";
    }

    void line(const std::string& x1, const std::string& y1, const std::string& x2,
              const std::string& y2, const std::string& style) {
        body_ += "  <line x1=\"" + x1 + "\" y1=\"" + y1 + "\" x2=\"" + x2 + "\" y2=\"" + y2 +
                 "\" " + style + "/>\n";
    }

    void polyline(const std::vector<std::pair<std::string, std::string>>& pts,
                  const std::string& style) {
        body_ += "  <polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i > 0) {
                body_ += " ";
            }
            body_ += pts[i].first + "," + pts[i].second;
        }
        body_ += "\" " + style + "/>\n";
    }

    void circle(const std::string& cx, const std::string& cy, const std::string& r,
                const std::string& style) {
        body_ += "  <circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + r + "\" " + style + "/>\n";
    }

    std::string finish() {
        return body_ + "</svg>\n";
    }

private:
    std::string body_;
};

} // namespace sticky::detail
