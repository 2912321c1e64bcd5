#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace stieltjes2d {

// Closed axis-aligned rectangle [a,b] x [c,d]. Degenerate rectangles
// (zero width or height) are representable only through quadrant()
// results; the public constructor rejects them.
struct Rect {
    double a, b, c, d;

    Rect(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
        if (!(a < b) || !(c < d))
            throw std::invalid_argument("Rect: require a < b and c < d");
    }

    double width() const { return b - a; }
    double height() const { return d - c; }
    double area() const { return width() * height(); }

    double mid_x() const { return 0.5 * (a + b); }
    double mid_y() const { return 0.5 * (c + d); }

    bool contains(double x, double y) const {
        return a <= x && x <= b && c <= y && y <= d;
    }
};

// A possibly degenerate sub-rectangle. Corollaries that reflect points
// into corners (x = a, y = c) need zero-area quadrants as values, so
// this type allows a == b and c == d.
struct SubRect {
    double a, b, c, d;

    SubRect(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
        if (!(a <= b) || !(c <= d))
            throw std::invalid_argument("SubRect: require a <= b and c <= d");
    }
    SubRect(const Rect& r) : a(r.a), b(r.b), c(r.c), d(r.d) {}

    double width() const { return b - a; }
    double height() const { return d - c; }
    double area() const { return width() * height(); }
    bool degenerate() const { return a == b || c == d; }
};

// The four closed quadrants of q meeting at (x,y):
// [a,x]x[c,y], [x,b]x[c,y], [a,x]x[y,d], [x,b]x[y,d]  (SW, SE, NW, NE).
// Degenerate quadrants are returned, not rejected.
inline std::array<SubRect, 4> rect_split(const Rect& q, double x, double y) {
    if (!q.contains(x, y))
        throw std::domain_error("rect_split: point outside rectangle");
    return {SubRect{q.a, x, q.c, y}, SubRect{x, q.b, q.c, y},
            SubRect{q.a, x, y, q.d}, SubRect{x, q.b, y, q.d}};
}

} // namespace stieltjes2d
