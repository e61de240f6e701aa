#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geostring/graph.hpp"
#include "geostring/separator.hpp"

namespace geostring {

// K_{t,t} subgraph witness; the two sides need not be independent sets.
struct Biclique {
    std::vector<int> side_a, side_b;  // sorted, disjoint, equal size
};

// Finds a K_{t,t} subgraph. Exhaustive enumerates t-subsets for side A in
// lexicographic order (complete under the work cap); greedy grows A from
// each seed by common-neighborhood size.
std::optional<Biclique> find_biclique(const Graph& g, int t, SearchStrategy strategy,
                                      long long work_cap = default_work_cap());

bool biclique_valid(const Graph& g, const Biclique& b);

// Edge-bound sanity hook: K_{t,t}-free string graphs must be sparse. Returns
// a finding string when m >= c_check * t * log2(t+1) * n, std::nullopt
// otherwise. A finding is logged by callers, never a crash.
std::optional<std::string> check_ktt_edge_bound(const Graph& g, int t, double c_check = 10.0);

}  // namespace geostring
