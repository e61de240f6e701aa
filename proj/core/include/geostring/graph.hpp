#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geostring {

// Simple undirected graph over vertices 0..n-1 with sorted adjacency and
// optional stable external names (declaration order of the source objects).
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int n() const { return static_cast<int>(adj_.size()); }
    long long m() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::vector<std::string> names;  // empty or size n()

    // Induced subgraph; `keep` lists original vertex ids in increasing order.
    // Vertex i of the result corresponds to keep[i].
    Graph induced(const std::vector<int>& keep) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

  private:
    std::vector<std::vector<int>> adj_;
};

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_forest(const Graph& g);

// `graph <n> <m>` header followed by `e <u> <v>` lines, ids as declared.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

std::string complete_name(int i);  // "v<i>" fallback names

}  // namespace geostring
