#include "geostring/cnf.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace geostring {

void CnfFormula::check() const {
    if (num_vars < 1) throw std::invalid_argument("formula needs at least one variable");
    for (const auto& c : clauses) {
        if (c.empty()) throw std::invalid_argument("empty clause");
        for (int lit : c)
            if (lit == 0 || std::abs(lit) > num_vars)
                throw std::invalid_argument("literal out of range: " + std::to_string(lit));
    }
}

CnfFormula parse_dimacs(std::istream& is) {
    CnfFormula f;
    std::string line;
    int declared_clauses = -1;
    bool have_header = false;
    int lineno = 0;
    std::vector<int> cur;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ss >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
                throw ParseError("bad DIMACS header at line " + std::to_string(lineno));
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("clause before header at line " + std::to_string(lineno));
        std::istringstream rest(line);
        int lit;
        while (rest >> lit) {
            if (lit == 0) {
                if (cur.empty()) throw ParseError("empty clause at line " + std::to_string(lineno));
                f.clauses.push_back(cur);
                cur.clear();
            } else {
                if (std::abs(lit) > f.num_vars)
                    throw ParseError("literal out of range at line " + std::to_string(lineno));
                cur.push_back(lit);
            }
        }
    }
    if (!have_header) throw ParseError("missing DIMACS header");
    if (!cur.empty()) f.clauses.push_back(cur);  // tolerate missing final 0
    if (declared_clauses >= 0 && declared_clauses != f.num_clauses())
        throw ParseError("clause count mismatch: declared " + std::to_string(declared_clauses) +
                         ", got " + std::to_string(f.num_clauses()));
    f.check();
    return f;
}

void write_dimacs(std::ostream& os, const CnfFormula& f) {
    os << "p cnf " << f.num_vars << " " << f.num_clauses() << "\n";
    for (const auto& c : f.clauses) {
        for (int lit : c) os << lit << " ";
        os << "0\n";
    }
}

std::optional<std::vector<bool>> sat_witness(const CnfFormula& f, long long sat_cap) {
    if (f.num_vars > sat_cap)
        throw CapExceeded("SAT brute force: " + std::to_string(f.num_vars) +
                          " variables exceed cap " + std::to_string(sat_cap));
    const int n = f.num_vars;
    for (std::uint64_t a = 0; a < (1ULL << n); ++a) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            bool sat = false;
            for (int lit : c) {
                bool val = (a >> (std::abs(lit) - 1)) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> out(n + 1, false);
            for (int v = 1; v <= n; ++v) out[v] = (a >> (v - 1)) & 1;
            return out;
        }
    }
    return std::nullopt;
}

bool sat_brute_force(const CnfFormula& f, long long sat_cap) {
    return sat_witness(f, sat_cap).has_value();
}

OccurrenceCounts count_occurrences(const CnfFormula& f) {
    OccurrenceCounts oc{std::vector<int>(f.num_vars + 1, 0), std::vector<int>(f.num_vars + 1, 0)};
    for (const auto& c : f.clauses)
        for (int lit : c) (lit > 0 ? oc.pos : oc.neg)[std::abs(lit)]++;
    return oc;
}

CnfFormula pad_to_three(const CnfFormula& f) {
    CnfFormula out;
    out.num_vars = f.num_vars;
    for (auto c : f.clauses) {
        if (c.size() > 3) throw std::invalid_argument("clause wider than 3");
        while (c.size() < 3) c.push_back(c.back());
        out.clauses.push_back(std::move(c));
    }
    return out;
}

namespace {

// Appends tautological filler clauses carrying the payload literals; each
// fresh variable t appears in exactly two fillers (t, -t in both), so fillers
// keep every occurrence budget balanced at one per polarity per filler.
// Payload is dealt round-robin: equal literals sit adjacently in the payload
// and land in distinct fillers, which downstream constructions require.
void append_fillers(CnfFormula& f, std::vector<int> payload, std::size_t chunk) {
    if (payload.empty()) return;
    std::size_t ngroups = (payload.size() + chunk - 1) / chunk;
    ngroups = std::max<std::size_t>(ngroups, 2);
    if (ngroups % 2 == 1) ++ngroups;
    std::vector<std::vector<int>> groups(ngroups);
    for (std::size_t i = 0; i < payload.size(); ++i) groups[i % ngroups].push_back(payload[i]);
    for (std::size_t i = 0; i < ngroups; i += 2) {
        int t = ++f.num_vars;
        std::vector<int> c1{t, -t}, c2{t, -t};
        for (int lit : groups[i]) c1.push_back(lit);
        for (int lit : groups[i + 1]) c2.push_back(lit);
        f.clauses.push_back(std::move(c1));
        f.clauses.push_back(std::move(c2));
    }
}

}  // namespace

namespace {

// One normalization pass; `force_split` lists input variables that must be
// split into copies regardless of their occurrence counts.
CnfFormula normalize_two_two_pass(const CnfFormula& f, const std::vector<bool>& force_split) {
    auto oc = count_occurrences(f);
    auto shares_clause = [&](int var) {
        for (const auto& c : f.clauses) {
            int p = 0, n = 0;
            for (int lit : c) {
                if (lit == var) ++p;
                if (lit == -var) ++n;
            }
            if (p >= 2 || n >= 2) return true;
        }
        return false;
    };

    CnfFormula out;
    out.num_vars = 0;
    std::vector<std::vector<int>> copies(f.num_vars + 1);
    std::vector<bool> split(f.num_vars + 1, false);
    for (int v = 1; v <= f.num_vars; ++v) {
        int p = oc.pos[v], q = oc.neg[v];
        if (p + q == 0 && !force_split[v]) {  // unused variable: padded image
            copies[v] = {++out.num_vars};
            continue;
        }
        if (p <= 2 && q <= 2 && !shares_clause(v) && !force_split[v]) {
            copies[v] = {++out.num_vars};
        } else {
            split[v] = true;
            int k = std::max({p, q, 2});
            for (int i = 0; i < k; ++i) copies[v].push_back(++out.num_vars);
        }
    }

    // original clauses with occurrences mapped to copies round-robin
    std::vector<int> next_pos(f.num_vars + 1, 0), next_neg(f.num_vars + 1, 0);
    for (const auto& c : f.clauses) {
        std::vector<int> nc;
        for (int lit : c) {
            int v = std::abs(lit);
            if (!split[v]) {
                nc.push_back(lit > 0 ? copies[v][0] : -copies[v][0]);
            } else {
                int& ctr = lit > 0 ? next_pos[v] : next_neg[v];
                int img = copies[v][ctr++];
                nc.push_back(lit > 0 ? img : -img);
            }
        }
        out.clauses.push_back(std::move(nc));
    }

    // implication cycles tying the copies together
    for (int v = 1; v <= f.num_vars; ++v) {
        if (!split[v]) continue;
        int k = static_cast<int>(copies[v].size());
        for (int i = 0; i < k; ++i)
            out.clauses.push_back({-copies[v][i], copies[v][(i + 1) % k]});
    }

    // pad all deficits with tautological fillers
    auto oc2 = count_occurrences(out);
    std::vector<int> payload;
    for (int v = 1; v <= f.num_vars; ++v)
        for (int img : copies[v]) {
            for (int i = oc2.pos[img]; i < 2; ++i) payload.push_back(img);
            for (int i = oc2.neg[img]; i < 2; ++i) payload.push_back(-img);
        }
    append_fillers(out, std::move(payload), 6);
    return out;
}

// Variables of `f` whose image literals end up with clashing clause pairs in
// `g` (two literals occurring in the same two clauses). img_of maps output
// variables back to input variables; fresh filler variables map to 0.
std::vector<int> clashing_sources(const CnfFormula& g, const std::vector<int>& img_of) {
    std::map<std::pair<int, int>, int> pair_owner;  // clause pair -> literal
    std::vector<int> bad;
    std::map<int, std::vector<int>> where;  // literal -> clause indices
    for (int j = 0; j < g.num_clauses(); ++j)
        for (int lit : g.clauses[j]) where[lit].push_back(j);
    for (auto& [lit, occ] : where) {
        std::sort(occ.begin(), occ.end());
        occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
        if (occ.size() != 2) continue;  // filler t literals are fine either way
        auto key = std::make_pair(occ[0], occ[1]);
        auto [it, fresh] = pair_owner.emplace(key, lit);
        if (!fresh) {
            for (int l : {lit, it->second}) {
                int src = img_of[std::abs(l)];
                if (src > 0) bad.push_back(src);
            }
        }
    }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    return bad;
}

}  // namespace

CnfFormula normalize_exact_two_two(const CnfFormula& f) {
    f.check();
    std::vector<bool> force_split(f.num_vars + 1, false);
    for (int round = 0; round <= f.num_vars + 1; ++round) {
        CnfFormula out = normalize_two_two_pass(f, force_split);
        // rebuild source map the same way the pass numbers variables
        auto oc = count_occurrences(f);
        std::vector<int> img_of(1, 0);
        {
            auto shares_clause = [&](int var) {
                for (const auto& c : f.clauses) {
                    int p = 0, n = 0;
                    for (int lit : c) {
                        if (lit == var) ++p;
                        if (lit == -var) ++n;
                    }
                    if (p >= 2 || n >= 2) return true;
                }
                return false;
            };
            for (int v = 1; v <= f.num_vars; ++v) {
                int p = oc.pos[v], q = oc.neg[v];
                bool spl = force_split[v] || p > 2 || q > 2 || ((p + q) > 0 && shares_clause(v));
                int k = spl ? std::max({p, q, 2}) : 1;
                for (int i = 0; i < k; ++i) img_of.push_back(v);
            }
            img_of.resize(out.num_vars + 1, 0);  // filler variables -> 0
        }
        auto bad = clashing_sources(out, img_of);
        if (bad.empty()) return out;
        bool progress = false;
        for (int v : bad)
            if (!force_split[v]) {
                force_split[v] = true;
                progress = true;
            }
        if (!progress)
            throw std::logic_error("two-two normalization cannot separate literal clause pairs");
    }
    throw std::logic_error("two-two normalization did not converge");
}

CnfFormula normalize_tovey(const CnfFormula& f) {
    CnfFormula three = pad_to_three(f);
    auto oc = count_occurrences(three);

    CnfFormula out;
    out.num_vars = 0;
    std::vector<std::vector<int>> copies(three.num_vars + 1);
    std::vector<bool> split(three.num_vars + 1, false);
    for (int v = 1; v <= three.num_vars; ++v) {
        int p = oc.pos[v], q = oc.neg[v];
        if (p <= 3 && q <= 3) {
            copies[v] = {++out.num_vars};
        } else {
            split[v] = true;
            // a copy's cycle uses its positive literal twice and negative
            // once, leaving one extra positive slot and two negative slots
            int k = std::max({p, (q + 1) / 2, 2});
            for (int i = 0; i < k; ++i) copies[v].push_back(++out.num_vars);
        }
    }

    std::vector<int> next_pos(three.num_vars + 1, 0), next_neg(three.num_vars + 1, 0);
    for (const auto& c : three.clauses) {
        std::vector<int> nc;
        for (int lit : c) {
            int v = std::abs(lit);
            if (!split[v]) {
                nc.push_back(lit > 0 ? copies[v][0] : -copies[v][0]);
            } else if (lit > 0) {
                int img = copies[v][next_pos[v]++ % copies[v].size()];
                nc.push_back(img);
            } else {
                int img = copies[v][(next_neg[v]++ / 2) % copies[v].size()];
                nc.push_back(-img);
            }
        }
        out.clauses.push_back(std::move(nc));
    }
    for (int v = 1; v <= three.num_vars; ++v) {
        if (!split[v]) continue;
        int k = static_cast<int>(copies[v].size());
        for (int i = 0; i < k; ++i)
            out.clauses.push_back(
                {-copies[v][i], copies[v][(i + 1) % k], copies[v][(i + 1) % k]});
    }
    return out;
}

}  // namespace geostring
