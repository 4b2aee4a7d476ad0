#include "powersum/geometry.hpp"

#include <optional>
#include <utility>

namespace powersum::dissect {

namespace {

struct Interval {
    QuadExt lo, hi;
};

// Maps the x/y extents of a rect through M and R; both act on coordinate
// intervals without any comparison.
std::pair<Interval, Interval> orient(Interval xs, Interval ys, int quarter_turns, bool reflect) {
    if (reflect) xs = {-xs.hi, -xs.lo};
    for (int i = 0; i < quarter_turns; ++i) {
        Interval nx{-ys.hi, -ys.lo};
        ys = std::move(xs);
        xs = std::move(nx);
    }
    return {std::move(xs), std::move(ys)};
}

std::optional<long> as_long(const QuadExt& q) {
    if (!q.is_rational() || !q.rational_part().is_integer()) return std::nullopt;
    const auto v = q.rational_part().num();
    if (!v.fits_slong_p()) return std::nullopt;
    return v.get_si();
}

}  // namespace

QuadExt Region::area() const {
    QuadExt total;
    for (const auto& r : rects) total += r.area();
    return total;
}

RigidTransform::Point RigidTransform::apply(const Point& p) const {
    QuadExt x = reflect ? -p.x : p.x;
    QuadExt y = p.y;
    for (int i = 0; i < quarter_turns; ++i) {
        QuadExt nx = -y;
        y = std::move(x);
        x = std::move(nx);
    }
    return {x + dx, y + dy};
}

Rect RigidTransform::apply(const Rect& r) const {
    auto [xs, ys] = orient({r.x, r.right()}, {r.y, r.top()}, quarter_turns, reflect);
    return {xs.lo + dx, ys.lo + dy, xs.hi - xs.lo, ys.hi - ys.lo};
}

Region RigidTransform::apply(const Region& r) const {
    Region out{{}, r.label};
    out.rects.reserve(r.rects.size());
    for (const auto& rect : r.rects) out.rects.push_back(apply(rect));
    return out;
}

RigidTransform compose(const RigidTransform& outer, const RigidTransform& inner) {
    // R^a M^s R^b M^t = R^(a + (s ? -b : b)) M^(s xor t), since M R M = R^-1.
    int turns = outer.quarter_turns + (outer.reflect ? -inner.quarter_turns : inner.quarter_turns);
    turns = ((turns % 4) + 4) % 4;
    RigidTransform linear_outer{outer.quarter_turns, outer.reflect, QuadExt(), QuadExt()};
    const auto shifted = linear_outer.apply(RigidTransform::Point{inner.dx, inner.dy});
    return {turns, outer.reflect != inner.reflect, shifted.x + outer.dx, shifted.y + outer.dy};
}

Rect unit_cell(long x, long y) { return {QuadExt(x), QuadExt(y), QuadExt(1), QuadExt(1)}; }

Region staircase(long n, long m, std::string label) {
    Region r{{}, std::move(label)};
    for (long j = 0; j <= n - m; ++j)
        r.rects.push_back({QuadExt(0), QuadExt(j), QuadExt(n - j), QuadExt(1)});
    return r;
}

std::vector<Rect> unit_cells(const Region& region) {
    std::vector<Rect> cells;
    for (const auto& r : region.rects) {
        auto x = as_long(r.x), y = as_long(r.y), w = as_long(r.w), h = as_long(r.h);
        if (!x || !y || !w || !h) return {};
        for (long j = 0; j < *h; ++j)
            for (long i = 0; i < *w; ++i) cells.push_back(unit_cell(*x + i, *y + j));
    }
    return cells;
}

}  // namespace powersum::dissect
