#include "geostring/geometry.hpp"

#include <algorithm>

namespace geostring {

int orient(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

namespace {

bool between(const Rational& lo, const Rational& hi, const Rational& v) {
    return (lo <= v && v <= hi) || (hi <= v && v <= lo);
}

// p collinear with s assumed; checks p inside the closed bounding range.
bool on_segment(const Segment& s, const Point& p) {
    return between(s.a.x, s.b.x, p.x) && between(s.a.y, s.b.y, p.y);
}

}  // namespace

bool segments_intersect(const Segment& s1, const Segment& s2) {
    int o1 = orient(s1.a, s1.b, s2.a);
    int o2 = orient(s1.a, s1.b, s2.b);
    int o3 = orient(s2.a, s2.b, s1.a);
    int o4 = orient(s2.a, s2.b, s1.b);

    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(s1, s2.a)) return true;
    if (o2 == 0 && on_segment(s1, s2.b)) return true;
    if (o3 == 0 && on_segment(s2, s1.a)) return true;
    if (o4 == 0 && on_segment(s2, s1.b)) return true;
    return false;
}

bool curve_segment_intersect(const PolyCurve& c, const Segment& s) {
    for (std::size_t i = 0; i < c.links(); ++i)
        if (segments_intersect(c.link(i), s)) return true;
    return false;
}

bool curves_intersect(const PolyCurve& c1, const PolyCurve& c2) {
    for (std::size_t i = 0; i < c1.links(); ++i)
        for (std::size_t j = 0; j < c2.links(); ++j)
            if (segments_intersect(c1.link(i), c2.link(j))) return true;
    return false;
}

Rational squared_length(const Segment& s) {
    Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
    return dx * dx + dy * dy;
}

}  // namespace geostring
