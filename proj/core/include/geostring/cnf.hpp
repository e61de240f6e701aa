#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "geostring/separator.hpp"

namespace geostring {

// Literal = +-variable index (1-based), clause = literal list.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    void check() const;  // throws on malformed literals / empty clauses
};

// DIMACS cnf: `p cnf N M` then 0-terminated clause lines, 'c' comments.
CnfFormula parse_dimacs(std::istream& is);
void write_dimacs(std::ostream& os, const CnfFormula& f);

// Exhaustive satisfiability; n_vars <= sat_cap or CapExceeded.
bool sat_brute_force(const CnfFormula& f, long long sat_cap = 20);
std::optional<std::vector<bool>> sat_witness(const CnfFormula& f, long long sat_cap = 20);

// Every clause exactly 3 literals, padding by repeating the last literal.
CnfFormula pad_to_three(const CnfFormula& f);

// Equisatisfiable formula where every variable occurs exactly twice
// positively and twice negatively, and the two occurrences of each literal
// sit in distinct clauses. Variables over the occurrence budget split into
// copies tied by an implication cycle; deficits are padded through
// tautological filler clauses (t OR NOT t OR ...) with fresh variables.
CnfFormula normalize_exact_two_two(const CnfFormula& f);

// Equisatisfiable formula with every clause exactly 3 wide and every literal
// occurring at most 3 times (copy chains as above, cycle clauses padded by
// literal duplication).
CnfFormula normalize_tovey(const CnfFormula& f);

// occurrence counts per polarity; index 1..num_vars
struct OccurrenceCounts {
    std::vector<int> pos, neg;
};
OccurrenceCounts count_occurrences(const CnfFormula& f);

}  // namespace geostring
