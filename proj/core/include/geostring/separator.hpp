#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geostring/graph.hpp"
#include "geostring/rational.hpp"

namespace geostring {

// Search work caps, overridable via the GEOSTRING_WORKCAP environment
// variable. Caps make exhaustive searches refuse rather than hang.
long long default_work_cap();

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Separator {
    std::vector<int> vertices;  // sorted
    Rational balance;           // the alpha it was checked against
};

enum class SearchStrategy { Exhaustive, Greedy };

// Balanced separator: every component of G - S has <= alpha * n vertices.
// Exhaustive enumerates subsets in (size, lexicographic) order and is
// complete under the work cap; greedy grows BFS balls from every start
// vertex and keeps the best boundary, and may miss.
std::optional<Separator> find_balanced_separator(const Graph& g, int budget,
                                                 const Rational& alpha,
                                                 SearchStrategy strategy,
                                                 long long work_cap = default_work_cap());

// True iff S is a valid alpha-balanced separator of g.
bool separator_valid(const Graph& g, const std::vector<int>& vertices, const Rational& alpha);

}  // namespace geostring
