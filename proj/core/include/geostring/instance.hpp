#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geostring/geometry.hpp"
#include "geostring/graph.hpp"

namespace geostring {

using GeomObject = std::variant<Segment, PolyCurve>;

// Named collection of segments / polygonal curves with optional color lists
// and provenance labels. Objects keep declaration order.
struct GeomInstance {
    std::vector<std::string> ids;
    std::vector<GeomObject> objects;
    std::map<std::string, std::vector<int>> lists;   // id -> colors (>=1)
    std::map<std::string, std::string> labels;       // id -> provenance role

    std::size_t size() const { return objects.size(); }
    int index_of(const std::string& id) const;  // -1 when missing

    void add_segment(const std::string& id, Point a, Point b,
                     std::string label = {});
    void add_curve(const std::string& id, std::vector<Point> pts,
                   std::string label = {});
    void set_list(const std::string& id, std::vector<int> colors);

    // Total endpoints plus bend points over all objects (the representation's
    // geometric-vertex count).
    long long geom_vertex_count() const;
};

struct InstanceStats {
    long long n = 0;
    bool all_segments = false;
    std::optional<int> direction_count;
    std::optional<bool> is_unit;
    std::optional<bool> is_pure_2dir;
};

InstanceStats instance_stats(const GeomInstance& inst);

// Vertex per object in declaration order; edge iff the two objects share at
// least one point (closed intersection). Deterministic.
Graph build_intersection_graph(const GeomInstance& inst);

// Text format: `segment <id> <x1> <y1> <x2> <y2>`, `curve <id> <pts...>`,
// `list <id> <c1,c2,...>`, '#' comments. Degenerate objects are rejected.
GeomInstance parse_instance(std::istream& is);
void write_instance(std::ostream& os, const GeomInstance& inst);

}  // namespace geostring
