#include "geostring/instance.hpp"

#include <algorithm>
#include <climits>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace geostring {

int GeomInstance::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return static_cast<int>(i);
    return -1;
}

void GeomInstance::add_segment(const std::string& id, Point a, Point b, std::string label) {
    if (a == b) throw ParseError("degenerate segment " + id);
    ids.push_back(id);
    objects.emplace_back(Segment{std::move(a), std::move(b)});
    if (!label.empty()) labels[id] = std::move(label);
}

void GeomInstance::add_curve(const std::string& id, std::vector<Point> pts, std::string label) {
    if (pts.size() < 2) throw ParseError("curve with fewer than 2 points: " + id);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] == pts[i + 1]) throw ParseError("repeated consecutive point in curve " + id);
    ids.push_back(id);
    objects.emplace_back(PolyCurve{std::move(pts)});
    if (!label.empty()) labels[id] = std::move(label);
}

void GeomInstance::set_list(const std::string& id, std::vector<int> colors) {
    lists[id] = std::move(colors);
}

long long GeomInstance::geom_vertex_count() const {
    long long total = 0;
    for (const auto& o : objects)
        total += std::holds_alternative<Segment>(o)
                     ? 2
                     : static_cast<long long>(std::get<PolyCurve>(o).points.size());
    return total;
}

namespace {

// Canonical direction of a segment: (dx, dy) reduced so that the leading
// nonzero coordinate is positive. Exact slope classes.
std::pair<Rational, Rational> direction_of(const Segment& s) {
    Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
    if (dx == 0) return {Rational(0), Rational(1)};
    return {Rational(1), dy / dx};
}

}  // namespace

InstanceStats instance_stats(const GeomInstance& inst) {
    InstanceStats st;
    st.n = static_cast<long long>(inst.size());
    st.all_segments =
        std::all_of(inst.objects.begin(), inst.objects.end(),
                    [](const GeomObject& o) { return std::holds_alternative<Segment>(o); });
    if (!st.all_segments || inst.objects.empty()) return st;

    std::vector<std::pair<Rational, Rational>> dirs;
    Rational len2;
    bool unit = true;
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& s = std::get<Segment>(inst.objects[i]);
        dirs.push_back(direction_of(s));
        Rational l2 = squared_length(s);
        if (i == 0)
            len2 = l2;
        else if (l2 != len2)
            unit = false;
    }
    std::set<std::pair<Rational, Rational>> distinct(dirs.begin(), dirs.end());
    st.direction_count = static_cast<int>(distinct.size());
    st.is_unit = unit;

    bool pure = (distinct.size() == 2);
    if (pure) {
        for (std::size_t i = 0; i < inst.objects.size() && pure; ++i)
            for (std::size_t j = i + 1; j < inst.objects.size() && pure; ++j) {
                if (dirs[i] != dirs[j]) continue;
                if (segments_intersect(std::get<Segment>(inst.objects[i]),
                                       std::get<Segment>(inst.objects[j])))
                    pure = false;
            }
    }
    st.is_pure_2dir = pure;
    return st;
}

// ---------------------------------------------------------------------------
// Intersection graph construction.
//
// Pairwise testing with an exact bounding-box prefilter. Coordinates are
// rescaled once to a common denominator so the orientation tests run on
// integers; when everything fits into 64 bits the hot path avoids
// arbitrary-precision arithmetic entirely.

namespace {

struct ScaledPoint {
    BigInt x, y;
};

struct I64Seg {
    long long ax, ay, bx, by;
};

int sgn_ll(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int orient_i64(long long ax, long long ay, long long bx, long long by, long long cx,
               long long cy) {
    __int128 c = static_cast<__int128>(bx - ax) * (cy - ay) -
                 static_cast<__int128>(by - ay) * (cx - ax);
    return sgn_ll(c);
}

bool between_ll(long long lo, long long hi, long long v) {
    return (lo <= v && v <= hi) || (hi <= v && v <= lo);
}

bool seg_intersect_i64(const I64Seg& s, const I64Seg& t) {
    int o1 = orient_i64(s.ax, s.ay, s.bx, s.by, t.ax, t.ay);
    int o2 = orient_i64(s.ax, s.ay, s.bx, s.by, t.bx, t.by);
    int o3 = orient_i64(t.ax, t.ay, t.bx, t.by, s.ax, s.ay);
    int o4 = orient_i64(t.ax, t.ay, t.bx, t.by, s.bx, s.by);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && between_ll(s.ax, s.bx, t.ax) && between_ll(s.ay, s.by, t.ay)) return true;
    if (o2 == 0 && between_ll(s.ax, s.bx, t.bx) && between_ll(s.ay, s.by, t.by)) return true;
    if (o3 == 0 && between_ll(t.ax, t.bx, s.ax) && between_ll(t.ay, t.by, s.ay)) return true;
    if (o4 == 0 && between_ll(t.ax, t.bx, s.bx) && between_ll(t.ay, t.by, s.by)) return true;
    return false;
}

struct Box64 {
    long long xlo, xhi, ylo, yhi;
    bool overlaps(const Box64& o) const {
        return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi;
    }
};

}  // namespace

Graph build_intersection_graph(const GeomInstance& inst) {
    const std::size_t n = inst.size();
    Graph g(static_cast<int>(n));
    g.names = inst.ids;

    // Common denominator over all coordinates.
    BigInt common = 1;
    auto fold = [&](const Point& p) {
        common = boost::multiprecision::lcm(common, den(p.x));
        common = boost::multiprecision::lcm(common, den(p.y));
    };
    for (const auto& o : inst.objects) {
        if (std::holds_alternative<Segment>(o)) {
            fold(std::get<Segment>(o).a);
            fold(std::get<Segment>(o).b);
        } else {
            for (const auto& p : std::get<PolyCurve>(o).points) fold(p);
        }
    }

    auto scale = [&](const Point& p) {
        return ScaledPoint{num(p.x) * (common / den(p.x)), num(p.y) * (common / den(p.y))};
    };

    // Per-object link lists in scaled integer coordinates.
    std::vector<std::vector<std::pair<ScaledPoint, ScaledPoint>>> links(n);
    BigInt max_abs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto push = [&](const Point& a, const Point& b) {
            ScaledPoint sa = scale(a), sb = scale(b);
            for (const BigInt* v : {&sa.x, &sa.y, &sb.x, &sb.y})
                if (boost::multiprecision::abs(*v) > max_abs)
                    max_abs = boost::multiprecision::abs(*v);
            links[i].emplace_back(std::move(sa), std::move(sb));
        };
        const auto& o = inst.objects[i];
        if (std::holds_alternative<Segment>(o)) {
            push(std::get<Segment>(o).a, std::get<Segment>(o).b);
        } else {
            const auto& c = std::get<PolyCurve>(o);
            for (std::size_t k = 0; k + 1 < c.points.size(); ++k)
                push(c.points[k], c.points[k + 1]);
        }
    }

    // 64-bit fast path: coordinates up to 2^31 keep every cross product
    // within __int128.
    if (max_abs <= BigInt(1) << 31) {
        std::vector<std::vector<I64Seg>> fast(n);
        std::vector<Box64> box(n);
        for (std::size_t i = 0; i < n; ++i) {
            Box64 b{LLONG_MAX, LLONG_MIN, LLONG_MAX, LLONG_MIN};
            for (const auto& [a, c] : links[i]) {
                I64Seg s{static_cast<long long>(a.x), static_cast<long long>(a.y),
                         static_cast<long long>(c.x), static_cast<long long>(c.y)};
                fast[i].push_back(s);
                b.xlo = std::min({b.xlo, s.ax, s.bx});
                b.xhi = std::max({b.xhi, s.ax, s.bx});
                b.ylo = std::min({b.ylo, s.ay, s.by});
                b.yhi = std::max({b.yhi, s.ay, s.by});
            }
            box[i] = b;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!box[i].overlaps(box[j])) continue;
                bool hit = false;
                for (const auto& s : fast[i]) {
                    for (const auto& t : fast[j])
                        if (seg_intersect_i64(s, t)) {
                            hit = true;
                            break;
                        }
                    if (hit) break;
                }
                if (hit) g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        return g;
    }

    // Exact big-integer path (same predicate over the original rationals).
    auto obj_intersect = [&](const GeomObject& a, const GeomObject& b) {
        if (std::holds_alternative<Segment>(a) && std::holds_alternative<Segment>(b))
            return segments_intersect(std::get<Segment>(a), std::get<Segment>(b));
        if (std::holds_alternative<Segment>(a))
            return curve_segment_intersect(std::get<PolyCurve>(b), std::get<Segment>(a));
        if (std::holds_alternative<Segment>(b))
            return curve_segment_intersect(std::get<PolyCurve>(a), std::get<Segment>(b));
        return curves_intersect(std::get<PolyCurve>(a), std::get<PolyCurve>(b));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (obj_intersect(inst.objects[i], inst.objects[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

// ---------------------------------------------------------------------------
// Text format.

GeomInstance parse_instance(std::istream& is) {
    GeomInstance inst;
    std::string line;
    int lineno = 0;
    std::set<std::string> seen;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw)) continue;
        try {
            if (kw == "segment") {
                std::string id, x1, y1, x2, y2;
                if (!(ss >> id >> x1 >> y1 >> x2 >> y2)) fail("segment needs id and 4 coordinates");
                if (!seen.insert(id).second) fail("duplicate id " + id);
                inst.add_segment(id, {parse_rational(x1), parse_rational(y1)},
                                 {parse_rational(x2), parse_rational(y2)});
            } else if (kw == "curve") {
                std::string id, tok;
                if (!(ss >> id)) fail("curve needs id");
                if (!seen.insert(id).second) fail("duplicate id " + id);
                std::vector<std::string> toks;
                while (ss >> tok) toks.push_back(tok);
                if (toks.size() < 4 || toks.size() % 2 != 0)
                    fail("curve needs at least 2 points (even coordinate count)");
                std::vector<Point> pts;
                for (std::size_t i = 0; i < toks.size(); i += 2)
                    pts.push_back({parse_rational(toks[i]), parse_rational(toks[i + 1])});
                inst.add_curve(id, std::move(pts));
            } else if (kw == "list") {
                std::string id, csv;
                if (!(ss >> id >> csv)) fail("list needs id and colors");
                std::vector<int> colors;
                std::istringstream cs(csv);
                std::string item;
                while (std::getline(cs, item, ',')) {
                    if (item.empty()) fail("empty color in list");
                    int c = std::stoi(item);
                    if (c < 1) fail("colors must be >= 1");
                    colors.push_back(c);
                }
                if (colors.empty()) fail("empty color list");
                inst.lists[id] = std::move(colors);
            } else {
                fail("unknown keyword '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
    for (const auto& [id, _] : inst.lists)
        if (inst.index_of(id) < 0) throw ParseError("list for unknown id " + id);
    return inst;
}

void write_instance(std::ostream& os, const GeomInstance& inst) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& o = inst.objects[i];
        if (std::holds_alternative<Segment>(o)) {
            const auto& s = std::get<Segment>(o);
            os << "segment " << inst.ids[i] << " " << rational_str(s.a.x) << " "
               << rational_str(s.a.y) << " " << rational_str(s.b.x) << " "
               << rational_str(s.b.y) << "\n";
        } else {
            os << "curve " << inst.ids[i];
            for (const auto& p : std::get<PolyCurve>(o).points)
                os << " " << rational_str(p.x) << " " << rational_str(p.y);
            os << "\n";
        }
    }
    for (const auto& [id, colors] : inst.lists) {
        os << "list " << id << " ";
        for (std::size_t i = 0; i < colors.size(); ++i)
            os << (i ? "," : "") << colors[i];
        os << "\n";
    }
}

}  // namespace geostring
