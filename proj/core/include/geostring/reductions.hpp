#pragma once

#include <string>

#include "geostring/cnf.hpp"
#include "geostring/instance.hpp"
#include "geostring/solve.hpp"

namespace geostring {

// Machine-checkable claim attached to a generated instance.
//  list-colorable: feasibility of list coloring  <=>  SAT
//  ds/ids "<=" value: solution of at most `value` exists  <=>  SAT
//  clique ">=" value: clique of at least `value` exists   <=>  SAT
struct Claim {
    Problem problem;
    std::string relation;  // "feasible", "<=", ">="
    long long value = 0;
};

struct ReductionResult {
    GeomInstance instance;
    Claim claim;
    long long predicted_count = 0;  // exact when exact_count, else an upper bound
    bool exact_count = true;
    // the formula actually encoded (post-normalization); verification runs
    // against this
    CnfFormula encoded;
    // audit rows for the mapping sidecar beyond per-object roles, e.g. the
    // chosen epsilon schedule
    std::vector<std::pair<std::string, std::string>> notes;
};

// Thm-style CNF compilers. Each returns exact rational coordinates; roles and
// the epsilon schedule are recorded in instance.labels.
ReductionResult reduce_list4col_2dir(const CnfFormula& f);                 // Pure 2-DIR, lists {1..4}
ReductionResult reduce_list_kcol_unit2dir(const CnfFormula& f, int k);    // unit 2-DIR, lists {1..k}
ReductionResult reduce_mds_segments(const CnfFormula& f);                 // dominating set
ReductionResult reduce_mids_segments(const CnfFormula& f);                // independent dominating set
ReductionResult reduce_clique_strings(const CnfFormula& f);               // max clique on curves

// SAT(result.encoded) <=> claim holds on the intersection graph, both decided
// exhaustively. Throws CapExceeded when the formula or graph is out of reach.
bool verify_reduction(const ReductionResult& r, const SolveConfig& cfg);

// ListAssignment for an instance whose lists are all set (k = max color or
// the supplied floor).
ListAssignment lists_of_instance(const GeomInstance& inst, int k_floor = 0);

bool claim_holds(const Claim& claim, const GeomInstance& inst, const SolveConfig& cfg);

// Standalone gadget instances for truth-table tests. `equality` selects the
// list pattern; geometry matches the in-reduction gadgets.
GeomInstance make_inequality_gadget_instance(bool equality);
GeomInstance make_sat_gadget_instance();
GeomInstance make_unit_gadget_instance(bool equality);  // overlap-style gadget

}  // namespace geostring
