#include <algorithm>
#include <map>

#include "geostring/reductions.hpp"

// Min (Connected) Dominating Set hardness instance. Clause segments are tiny
// tangent pieces at strictly convex positions on the parabola y = x^2 with
// Sidon x-coordinates, so no two chords share a direction. A literal's
// segment is the chord through its two clauses, extended until all chords
// pairwise cross. Each variable gets a private pairing segment crossing
// exactly its two chords.

namespace geostring {

namespace {

Rational rat(long long p, long long q = 1) { return Rational(p, q); }

// Greedy set with pairwise-distinct pair sums (distinct chord slopes).
std::vector<long long> sidon_values(int count) {
    std::vector<long long> vals;
    std::map<long long, bool> sums;
    long long next = 1;
    while (static_cast<int>(vals.size()) < count) {
        bool ok = true;
        for (long long v : vals)
            if (sums.count(v + next)) {
                ok = false;
                break;
            }
        if (ok) {
            for (long long v : vals) sums[v + next] = true;
            vals.push_back(next);
        }
        ++next;
    }
    return vals;
}

struct ChordLine {
    Rational slope, offset;  // y = slope*x - offset
    Rational y_at(const Rational& x) const { return slope * x - offset; }
};

}  // namespace

ReductionResult reduce_mds_segments(const CnfFormula& f) {
    CnfFormula g = normalize_exact_two_two(f);
    const int n_vars = g.num_vars;
    const int m = g.num_clauses();

    // occurrence clauses per literal: exactly two, distinct
    std::vector<std::vector<int>> pos_in(n_vars + 1), neg_in(n_vars + 1);
    for (int j = 0; j < m; ++j)
        for (int lit : g.clauses[j])
            (lit > 0 ? pos_in : neg_in)[std::abs(lit)].push_back(j);
    for (int v = 1; v <= n_vars; ++v) {
        if (pos_in[v].size() != 2 || neg_in[v].size() != 2 || pos_in[v][0] == pos_in[v][1] ||
            neg_in[v][0] == neg_in[v][1])
            throw std::logic_error("normalization did not yield 2+2 occurrences");
    }

    auto s = sidon_values(m);
    const long long s_max = s.back();

    // chord lines; literal index: 2v-2 positive, 2v-1 negative
    std::vector<ChordLine> chords(2 * n_vars);
    for (int v = 1; v <= n_vars; ++v) {
        auto line_for = [&](const std::vector<int>& occ) {
            Rational sa = rat(s[occ[0]]), sb = rat(s[occ[1]]);
            return ChordLine{sa + sb, sa * sb};
        };
        chords[2 * v - 2] = line_for(pos_in[v]);
        chords[2 * v - 1] = line_for(neg_in[v]);
    }

    // extent covering all pairwise intersections and all clause points
    Rational X = rat(s_max + 1);
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            Rational dx = chords[i].slope - chords[j].slope;
            if (dx == 0) throw std::logic_error("duplicate chord slope despite Sidon set");
            Rational xs = (chords[i].offset - chords[j].offset) / dx;
            if (xs + 1 > X) X = xs + 1;
            if (-xs + 1 > X) X = -xs + 1;
        }

    ReductionResult out;
    out.encoded = g;
    GeomInstance& inst = out.instance;
    const Rational eps = Rational(1, 8 * (s_max + 1));

    // clause segments: tangent pieces at (s_j, s_j^2)
    for (int j = 0; j < m; ++j) {
        Rational sj = rat(s[j]);
        Point a{sj - eps, sj * sj - 2 * sj * eps};
        Point b{sj + eps, sj * sj + 2 * sj * eps};
        inst.add_segment("C" + std::to_string(j + 1), a, b,
                         "clause segment for C_" + std::to_string(j + 1));
    }
    // literal chords
    for (int v = 1; v <= n_vars; ++v)
        for (int sgn = 0; sgn < 2; ++sgn) {
            const ChordLine& c = chords[2 * v - 2 + sgn];
            std::string id = (sgn == 0 ? "Lp" : "Ln") + std::to_string(v);
            inst.add_segment(id, {-X, c.y_at(-X)}, {X, c.y_at(X)},
                             std::string(sgn == 0 ? "literal segment x_" : "literal segment -x_") +
                                 std::to_string(v));
        }

    // pairing segments: candidates near the chord crossing, verified exactly
    for (int v = 1; v <= n_vars; ++v) {
        const ChordLine& c1 = chords[2 * v - 2];
        const ChordLine& c2 = chords[2 * v - 1];
        Rational xq = (c1.offset - c2.offset) / (c1.slope - c2.slope);
        std::string id = "p" + std::to_string(v);
        int c1_idx = inst.index_of("Lp" + std::to_string(v));
        int c2_idx = inst.index_of("Ln" + std::to_string(v));

        bool placed = false;
        Rational e = eps;
        for (int shrink = 0; shrink < 4 && !placed; ++shrink, e /= 16) {
            for (int side = 0; side < 4 && !placed; ++side) {
                Rational e1 = (side & 1) ? -e : e;
                Rational e2 = (side & 2) ? -e1 : e1;  // same-sided or crossed
                Point a{xq + e1, c1.y_at(xq + e1)};
                Point b{xq + e2, c2.y_at(xq + e2)};
                if (a == b) continue;
                Segment cand{a, b};
                bool ok = true;
                for (std::size_t o = 0; o < inst.size() && ok; ++o) {
                    bool hit = segments_intersect(std::get<Segment>(inst.objects[o]), cand);
                    bool want = static_cast<int>(o) == c1_idx || static_cast<int>(o) == c2_idx;
                    if (hit != want) ok = false;
                }
                if (ok) {
                    inst.add_segment(id, a, b, "pairing segment for x_" + std::to_string(v));
                    placed = true;
                }
            }
        }
        if (!placed)
            throw std::runtime_error("could not place pairing segment for variable " +
                                     std::to_string(v));
    }

    out.claim = Claim{Problem::Ds, "<=", n_vars};
    out.predicted_count = 3LL * n_vars + m;
    out.exact_count = true;
    out.notes = {{"_eps_clause_tangent", rational_str(eps)},
                 {"_extent", rational_str(X)},
                 {"_sidon_max", std::to_string(s_max)}};
    return out;
}

}  // namespace geostring
