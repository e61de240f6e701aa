#pragma once

#include <vector>

#include "geostring/rational.hpp"

namespace geostring {

struct Point {
    Rational x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Closed straight-line segment with distinct endpoints.
struct Segment {
    Point a, b;
};

// Polygonal curve, >= 2 points, consecutive points distinct.
// Simplicity (no self-crossing) is not an invariant here.
struct PolyCurve {
    std::vector<Point> points;
    std::size_t links() const { return points.size() - 1; }
    Segment link(std::size_t i) const { return Segment{points[i], points[i + 1]}; }
};

// Sign of the cross product (b-a) x (c-a): +1 counterclockwise, 0 collinear,
// -1 clockwise. Exact.
int orient(const Point& a, const Point& b, const Point& c);

// Closed intersection: endpoint touching and collinear overlap both count.
bool segments_intersect(const Segment& s1, const Segment& s2);

bool curves_intersect(const PolyCurve& c1, const PolyCurve& c2);
bool curve_segment_intersect(const PolyCurve& c, const Segment& s);

// Squared Euclidean length, exact.
Rational squared_length(const Segment& s);

}  // namespace geostring
