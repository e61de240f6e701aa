#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geostring/graph.hpp"
#include "geostring/separator.hpp"

namespace geostring {

enum class Problem { Mis, KCol, ListCol, Fvs, Ds, ConnectedDs, Ids, Clique };

Problem problem_from_string(const std::string& s);
std::string problem_to_string(Problem p);

// Per-vertex color lists over {1..k}; every list nonempty.
struct ListAssignment {
    int k = 0;
    std::vector<std::vector<int>> lists;  // sorted ascending
};

struct SolveConfig {
    int deg_threshold_override = 0;  // 0 = ceil(n^(1/3)) of the current subproblem
    int sep_const = 3;               // separator budget ceil(sep_const * sqrt(m))
    double edge_const = 10.0;        // c in the dense-case trigger (c/3) n^(4/3) log2 n
    Rational alpha = Rational(2, 3);
    long long oracle_cap = 24;   // brute_solve vertex cap
    long long sat_cap = 12;      // SAT brute-force variable cap
    long long work_cap = default_work_cap();
    int sep_enum_cap = 12;       // max |S| enumerated in divide-and-conquer
    int fvs_sep_cap = 8;         // max |S| for the FVS partition scheme
    unsigned seed = 0;
};

struct SolveTrace {
    long long branch_nodes = 0;
    long long separator_splits = 0;
    long long fallbacks = 0;
    long long biclique_branches = 0;
    long long propagations = 0;
    bool operator==(const SolveTrace&) const = default;
};

struct SolveReport {
    bool feasible = false;            // coloring problems
    long long optimum = -1;           // optimization problems
    std::vector<int> witness_set;     // sorted vertex ids
    std::vector<int> witness_coloring;  // per-vertex color, 0 unused
    SolveTrace trace;
    bool operator==(const SolveReport&) const = default;
};

// Exact solvers by exhaustive search (complete branching / backtracking).
// These are the oracles everything else is checked against.
// pre: g.n() <= cfg.oracle_cap, else CapExceeded.
SolveReport brute_solve(Problem p, const Graph& g, const SolveConfig& cfg, int k = 0,
                        const ListAssignment* lists = nullptr);

// Decision form "is there a solution of size <= bound" for ds/cds/ids, and
// "is there a clique of size >= bound" for clique. Same complete search with
// an upper-bound cutoff; no oracle cap (intended for structured instances).
bool brute_decision(Problem p, const Graph& g, long long bound, const SolveConfig& cfg);

// Complete list-coloring feasibility with MRV backtracking; no vertex cap.
std::optional<std::vector<int>> brute_list_coloring(const Graph& g, const ListAssignment& la);

bool verify_solution(Problem p, const Graph& g, const SolveReport& r, int k = 0,
                     const ListAssignment* lists = nullptr);

// The win-win solvers: high-degree / biclique branching when dense, balanced
// separator divide-and-conquer when sparse, complete fallback otherwise.
SolveReport solve_mis_winwin(const Graph& g, const SolveConfig& cfg);
SolveReport solve_list_kcol_winwin(const Graph& g, const ListAssignment& lists,
                                   const SolveConfig& cfg);
SolveReport solve_fvs_winwin(const Graph& g, const SolveConfig& cfg);

// Witness file: `solution <problem> <size>` + one vertex id per line, or
// `color <id> <c>` lines for colorings.
void write_witness(std::ostream& os, Problem p, const Graph& g, const SolveReport& r);

int ceil_cbrt(long long n);
int ceil_sqrt_scaled(long long m, int c);  // ceil(c * sqrt(m))

}  // namespace geostring
