#include "geostring/reductions.hpp"

// List-4-coloring hardness instance on Pure 2-DIR segments: a grid of
// variable rows and occurrence columns, equality/inequality gadgets at the
// occurrence crossings, satisfiability gadgets on top of each clause triple.
// Colors 1/2 on rows encode variable truth, 3/4 on columns literal truth.

namespace geostring {

namespace {

Rational rat(long long p, long long q = 1) { return Rational(p, q); }

}  // namespace

GeomInstance make_inequality_gadget_instance(bool equality) {
    // Geometry of one crossing gadget in isolation, crossing at the origin.
    GeomInstance inst;
    Rational h(1, 16);
    inst.add_segment("x", {rat(-2), rat(0)}, {rat(1), rat(0)}, "variable segment");
    inst.add_segment("y", {rat(0), rat(-1)}, {rat(0), rat(2)}, "occurrence segment");
    inst.add_segment("a", {-3 * h, -h}, {-3 * h, 3 * h}, "gadget a");
    inst.add_segment("b", {rat(-5, 32), -h}, {rat(-5, 32), 3 * h}, "gadget b");
    inst.add_segment("c", {rat(-7, 32), 2 * h}, {rat(1, 32), 2 * h}, "gadget c");
    inst.set_list("x", {1, 2});
    inst.set_list("y", {3, 4});
    if (equality) {
        inst.set_list("a", {1, 3});
        inst.set_list("b", {2, 4});
    } else {
        inst.set_list("a", {1, 4});
        inst.set_list("b", {2, 3});
    }
    inst.set_list("c", {3, 4});
    return inst;
}

GeomInstance make_sat_gadget_instance() {
    // Clause gadget in isolation; y1..y3 are the literal columns.
    GeomInstance inst;
    inst.add_segment("y1", {rat(0), rat(0)}, {rat(0), rat(2)}, "literal segment 1");
    inst.add_segment("y2", {rat(1, 2), rat(0)}, {rat(1, 2), rat(2) + rat(1, 8)},
                     "literal segment 2");
    inst.add_segment("y3", {rat(1), rat(0)}, {rat(1), rat(2) + rat(1, 4)}, "literal segment 3");
    Rational xd = rat(-1, 4);
    inst.add_segment("a", {xd - rat(1, 8), rat(2) - rat(1, 16)},
                     {rat(1, 8), rat(2) - rat(1, 16)}, "sat gadget a");
    inst.add_segment("b", {xd - rat(1, 8), rat(2) + rat(1, 16)},
                     {rat(1, 2) + rat(1, 8), rat(2) + rat(1, 16)}, "sat gadget b");
    inst.add_segment("c", {xd - rat(1, 8), rat(2) + rat(3, 16)},
                     {rat(1) + rat(1, 8), rat(2) + rat(3, 16)}, "sat gadget c");
    inst.add_segment("d", {xd, rat(2) - rat(1, 8)}, {xd, rat(2) + rat(1, 4)}, "sat gadget d");
    inst.set_list("y1", {3, 4});
    inst.set_list("y2", {3, 4});
    inst.set_list("y3", {3, 4});
    inst.set_list("a", {1, 4});
    inst.set_list("b", {2, 4});
    inst.set_list("c", {3, 4});
    inst.set_list("d", {1, 2, 3});
    return inst;
}

ReductionResult reduce_list4col_2dir(const CnfFormula& f) {
    f.check();
    CnfFormula three = pad_to_three(f);
    const int n_vars = three.num_vars;
    const int m = three.num_clauses();

    ReductionResult out;
    out.encoded = three;
    GeomInstance& inst = out.instance;
    const Rational h(1, 16);

    // variable rows
    for (int i = 1; i <= n_vars; ++i) {
        std::string id = "x" + std::to_string(i);
        inst.add_segment(id, {rat(0), rat(-i)}, {rat(2 * m + 2), rat(-i)},
                         "x_" + std::to_string(i) + " variable segment");
        inst.set_list(id, {1, 2});
    }

    // occurrence columns, tops staggered so the sat horizontals can pick one
    for (int j = 1; j <= m; ++j)
        for (int l = 0; l < 3; ++l) {
            std::string id = "y" + std::to_string(j) + "_" + std::to_string(l + 1);
            Rational x = rat(2 * j) + rat(l, 2);
            Rational top = rat(2) + rat(l, 8);
            inst.add_segment(id, {x, rat(-n_vars) - rat(1, 2)}, {x, top},
                             "y^" + std::to_string(j) + "_" + std::to_string(l + 1) +
                                 " occurrence segment");
            inst.set_list(id, {3, 4});
        }

    // (in)equality gadget at each occurrence crossing
    for (int j = 1; j <= m; ++j)
        for (int l = 0; l < 3; ++l) {
            int lit = three.clauses[j - 1][l];
            int i = std::abs(lit);
            bool equality = lit > 0;
            Rational X = rat(2 * j) + rat(l, 2);
            Rational Y = rat(-i);
            std::string base = std::string(equality ? "eq" : "ne") + std::to_string(j) + "_" +
                               std::to_string(l + 1);
            std::string what = std::string(equality ? "equality" : "inequality") + " gadget ";
            std::string ctx = " for x_" + std::to_string(i) + " in C_" + std::to_string(j);
            inst.add_segment(base + "_a", {X - 3 * h, Y - h}, {X - 3 * h, Y + 3 * h},
                             what + "a" + ctx);
            inst.add_segment(base + "_b", {X - rat(5, 32), Y - h}, {X - rat(5, 32), Y + 3 * h},
                             what + "b" + ctx);
            inst.add_segment(base + "_c", {X - rat(7, 32), Y + 2 * h}, {X + rat(1, 32), Y + 2 * h},
                             what + "c" + ctx);
            if (equality) {
                inst.set_list(base + "_a", {1, 3});
                inst.set_list(base + "_b", {2, 4});
            } else {
                inst.set_list(base + "_a", {1, 4});
                inst.set_list(base + "_b", {2, 3});
            }
            inst.set_list(base + "_c", {3, 4});
        }

    // satisfiability gadget above each clause triple
    for (int j = 1; j <= m; ++j) {
        Rational X1 = rat(2 * j), X2 = X1 + rat(1, 2), X3 = X1 + rat(1);
        Rational xd = X1 - rat(1, 4);
        std::string base = "sat" + std::to_string(j);
        std::string ctx = " for C_" + std::to_string(j);
        inst.add_segment(base + "_a", {xd - rat(1, 8), rat(2) - rat(1, 16)},
                         {X1 + rat(1, 8), rat(2) - rat(1, 16)}, "sat gadget a" + ctx);
        inst.add_segment(base + "_b", {xd - rat(1, 8), rat(2) + rat(1, 16)},
                         {X2 + rat(1, 8), rat(2) + rat(1, 16)}, "sat gadget b" + ctx);
        inst.add_segment(base + "_c", {xd - rat(1, 8), rat(2) + rat(3, 16)},
                         {X3 + rat(1, 8), rat(2) + rat(3, 16)}, "sat gadget c" + ctx);
        inst.add_segment(base + "_d", {xd, rat(2) - rat(1, 8)}, {xd, rat(2) + rat(1, 4)},
                         "sat gadget d" + ctx);
        inst.set_list(base + "_a", {1, 4});
        inst.set_list(base + "_b", {2, 4});
        inst.set_list(base + "_c", {3, 4});
        inst.set_list(base + "_d", {1, 2, 3});
    }

    out.claim = Claim{Problem::ListCol, "feasible", 0};
    out.predicted_count = n_vars + 16LL * m;
    out.exact_count = true;
    out.notes = {{"_eps_gadget_scale", "1/16"},
                 {"_eps_top_stagger", "1/8"},
                 {"_grid_row_pitch", "1"},
                 {"_grid_col_pitch", "1/2"}};
    return out;
}

}  // namespace geostring
