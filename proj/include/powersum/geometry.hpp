#pragma once

// Axis-aligned rectilinear geometry over Q(sqrt 21).

#include <string>
#include <utility>
#include <vector>

#include "powersum/exact.hpp"

namespace powersum::dissect {

using exact::QuadExt;
using exact::Rat;

/// [x, x + w) x [y, y + h); w and h must be positive.
struct Rect {
    QuadExt x, y, w, h;

    QuadExt area() const { return w * h; }
    QuadExt right() const { return x + w; }
    QuadExt top() const { return y + h; }
    friend bool operator==(const Rect&, const Rect&) = default;
};

struct Region {
    std::vector<Rect> rects;
    std::string label;

    QuadExt area() const;
    friend bool operator==(const Region&, const Region&) = default;
};

/// p -> R^quarter_turns (M p) + (dx, dy), where M mirrors across the
/// vertical axis (x -> -x) when `reflect` is set and R is a counter-clockwise
/// quarter turn about the origin.
struct RigidTransform {
    int quarter_turns = 0;  // 0..3
    bool reflect = false;
    QuadExt dx;
    QuadExt dy;

    static RigidTransform translation(QuadExt dx, QuadExt dy) {
        return {0, false, std::move(dx), std::move(dy)};
    }

    bool valid() const { return quarter_turns >= 0 && quarter_turns <= 3; }

    struct Point {
        QuadExt x, y;
        friend bool operator==(const Point&, const Point&) = default;
    };

    Point apply(const Point& p) const;
    Rect apply(const Rect& r) const;
    Region apply(const Region& r) const;

    friend bool operator==(const RigidTransform&, const RigidTransform&) = default;
};

/// (outer o inner)(p) = outer(inner(p)).
RigidTransform compose(const RigidTransform& outer, const RigidTransform& inner);

/// Unit cell [x, x+1) x [y, y+1).
Rect unit_cell(long x, long y);

/// Rows of lengths n, n-1, ..., m stacked upward from y = 0 and
/// left-aligned at x = 0: the truncated triangle with steps m..n.
Region staircase(long n, long m, std::string label);

/// Splits a region whose rects have integer corners into unit cells, in
/// row-major order from the bottom-left. Returns nothing if any corner is
/// not an integer.
std::vector<Rect> unit_cells(const Region& r);

}  // namespace powersum::dissect
