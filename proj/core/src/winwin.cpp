#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "geostring/biclique.hpp"
#include "geostring/solve.hpp"

// The three subexponential win-win solvers. Each recursion level looks at the
// CURRENT subproblem: branch on dense structure (high-degree vertex for MIS
// and list coloring, a K_{t,t} for FVS) when present, otherwise split on a
// balanced separator; a complete brute-force fallback keeps them total.

namespace geostring {

namespace {

int deg_threshold(const SolveConfig& cfg, int n) {
    if (cfg.deg_threshold_override > 0) return cfg.deg_threshold_override;
    return std::max(1, ceil_cbrt(n));
}

long long fvs_edge_threshold(const SolveConfig& cfg, int n) {
    if (n <= 1) return LLONG_MAX;
    double v = cfg.edge_const / 3.0 * std::pow(static_cast<double>(n), 4.0 / 3.0) *
               std::log2(static_cast<double>(std::max(n, 2)));
    if (v >= 9e18) return LLONG_MAX;
    return static_cast<long long>(std::ceil(v));
}

// Separator attempt on the current subgraph: exhaustive under the work cap,
// then greedy. Returned separator indices refer to `h`.
std::optional<Separator> try_separator(const Graph& h, const SolveConfig& cfg) {
    long long m = h.m();
    int budget = std::min(ceil_sqrt_scaled(m, cfg.sep_const), h.n());
    std::optional<Separator> sep;
    try {
        sep = find_balanced_separator(h, budget, cfg.alpha, SearchStrategy::Exhaustive,
                                      cfg.work_cap);
    } catch (const CapExceeded&) {
        sep = find_balanced_separator(h, budget, cfg.alpha, SearchStrategy::Greedy);
    }
    return sep;
}

// ---------------------------------------------------------------------------
// Max independent set

struct MisSolver {
    const SolveConfig& cfg;
    SolveTrace trace;

    // act: sorted original-id vertex set of the current subproblem.
    std::pair<long long, std::vector<int>> solve(const Graph& g, std::vector<int> act) {
        const int n = static_cast<int>(act.size());
        if (n == 0) return {0, {}};
        if (n == 1) return {1, act};

        Graph h = g.induced(act);
        int thr = deg_threshold(cfg, n);
        int best_v = 0;
        for (int v = 0; v < n; ++v)
            if (h.degree(v) > h.degree(best_v)) best_v = v;

        if (h.degree(best_v) >= thr) {
            ++trace.branch_nodes;
            std::vector<int> excl_act, incl_act;
            for (int v = 0; v < n; ++v) {
                if (v == best_v) continue;
                excl_act.push_back(act[v]);
                if (!h.has_edge(best_v, v)) incl_act.push_back(act[v]);
            }
            auto incl = solve(g, incl_act);
            auto excl = solve(g, excl_act);
            if (incl.first + 1 >= excl.first) {
                incl.second.push_back(act[best_v]);
                std::sort(incl.second.begin(), incl.second.end());
                return {incl.first + 1, incl.second};
            }
            return excl;
        }

        auto sep = try_separator(h, cfg);
        if (sep && static_cast<int>(sep->vertices.size()) <= cfg.sep_enum_cap) {
            ++trace.separator_splits;
            const auto& S = sep->vertices;
            std::vector<char> in_s(n, 0);
            for (int v : S) in_s[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!in_s[v]) rest.push_back(v);
            Graph hr = h.induced(rest);
            auto comps = connected_components(hr);

            long long best = -1;
            std::vector<int> best_set;
            const std::size_t k = S.size();
            for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
                std::vector<int> is;
                bool ok = true;
                for (std::size_t i = 0; i < k && ok; ++i)
                    if ((mask >> i) & 1) {
                        for (int u : is)
                            if (h.has_edge(u, S[i])) {
                                ok = false;
                                break;
                            }
                        if (ok) is.push_back(S[i]);
                    }
                if (!ok) continue;
                long long total = static_cast<long long>(is.size());
                std::vector<int> chosen;
                for (int u : is) chosen.push_back(act[u]);
                for (const auto& comp : comps) {
                    std::vector<int> sub;
                    for (int ci : comp) {
                        int hv = rest[ci];
                        bool banned = false;
                        for (int u : is)
                            if (h.has_edge(u, hv)) {
                                banned = true;
                                break;
                            }
                        if (!banned) sub.push_back(act[hv]);
                    }
                    auto r = solve(g, sub);
                    total += r.first;
                    chosen.insert(chosen.end(), r.second.begin(), r.second.end());
                }
                if (total > best) {
                    best = total;
                    std::sort(chosen.begin(), chosen.end());
                    best_set = std::move(chosen);
                }
            }
            return {best, best_set};
        }

        ++trace.fallbacks;
        SolveConfig sub = cfg;
        sub.oracle_cap = std::max<long long>(cfg.oracle_cap, n);
        auto r = brute_solve(Problem::Mis, h, sub);
        std::vector<int> set;
        for (int v : r.witness_set) set.push_back(act[v]);
        return {r.optimum, set};
    }
};

// ---------------------------------------------------------------------------
// List k-coloring

struct ColSolver {
    const SolveConfig& cfg;
    SolveTrace trace;
    bool overflow = false;

    // act: original ids; dom: current lists (sorted) per original id.
    // Returns colors per original id (map) or nullopt.
    std::optional<std::map<int, int>> solve(const Graph& g, std::vector<int> act,
                                            std::map<int, std::vector<int>> dom) {
        std::map<int, int> fixed;
        // (1) singleton propagation: fix color, remove from neighbor lists
        bool again = true;
        while (again) {
            again = false;
            for (int v : act) {
                auto& dv = dom[v];
                if (dv.empty()) return std::nullopt;
                if (dv.size() != 1) continue;
                int c = dv[0];
                ++trace.propagations;
                fixed[v] = c;
                act.erase(std::find(act.begin(), act.end(), v));
                dom.erase(v);
                for (int w : g.neighbors(v)) {
                    auto it = dom.find(w);
                    if (it == dom.end()) continue;
                    auto pos = std::find(it->second.begin(), it->second.end(), c);
                    if (pos != it->second.end()) it->second.erase(pos);
                    if (it->second.empty()) return std::nullopt;
                }
                again = true;
                break;
            }
        }
        if (act.empty()) return fixed;

        const int n = static_cast<int>(act.size());
        Graph h = g.induced(act);
        int thr = deg_threshold(cfg, n);
        int best_v = 0;
        for (int v = 0; v < n; ++v)
            if (h.degree(v) > h.degree(best_v)) best_v = v;

        auto merge = [&fixed](std::map<int, int> more) {
            for (auto& [v, c] : more) fixed[v] = c;
            return fixed;
        };

        if (h.degree(best_v) >= thr) {
            // (2) majority color of v's list among neighbor lists, branch
            // assign / remove; ties by smaller color.
            ++trace.branch_nodes;
            int ov = act[best_v];
            int pick = -1, cnt = -1;
            for (int c : dom[ov]) {
                int occ = 0;
                for (int w : h.neighbors(best_v)) {
                    const auto& dw = dom[act[w]];
                    if (std::binary_search(dw.begin(), dw.end(), c)) ++occ;
                }
                if (occ > cnt) {
                    cnt = occ;
                    pick = c;
                }
            }
            auto with = dom;
            with[ov] = {pick};
            if (auto r = solve(g, act, std::move(with))) return merge(std::move(*r));
            auto without = dom;
            auto& dv = without[ov];
            dv.erase(std::find(dv.begin(), dv.end(), pick));
            if (auto r = solve(g, act, std::move(without))) return merge(std::move(*r));
            return std::nullopt;
        }

        // (3) separator divide-and-conquer
        auto sep = try_separator(h, cfg);
        if (sep && static_cast<int>(sep->vertices.size()) <= cfg.sep_enum_cap) {
            double prod = 1;
            for (int v : sep->vertices) prod *= static_cast<double>(dom[act[v]].size());
            if (prod <= 65536.0) {
                ++trace.separator_splits;
                const auto& S = sep->vertices;
                std::vector<char> in_s(n, 0);
                for (int v : S) in_s[v] = 1;
                std::vector<int> rest;
                for (int v = 0; v < n; ++v)
                    if (!in_s[v]) rest.push_back(v);
                Graph hr = h.induced(rest);
                auto comps = connected_components(hr);

                std::vector<std::size_t> choice(S.size(), 0);
                while (true) {
                    bool proper = true;
                    for (std::size_t i = 0; i < S.size() && proper; ++i)
                        for (std::size_t j = i + 1; j < S.size() && proper; ++j)
                            if (h.has_edge(S[i], S[j]) &&
                                dom[act[S[i]]][choice[i]] == dom[act[S[j]]][choice[j]])
                                proper = false;
                    if (proper) {
                        std::map<int, int> assigned;
                        for (std::size_t i = 0; i < S.size(); ++i)
                            assigned[act[S[i]]] = dom[act[S[i]]][choice[i]];
                        bool all_ok = true;
                        std::map<int, int> joint = assigned;
                        for (const auto& comp : comps) {
                            std::vector<int> sub;
                            std::map<int, std::vector<int>> sub_dom;
                            bool dead = false;
                            for (int ci : comp) {
                                int ov = act[rest[ci]];
                                std::vector<int> d = dom[ov];
                                for (int w : g.neighbors(ov)) {
                                    auto it = assigned.find(w);
                                    if (it == assigned.end()) continue;
                                    auto pos = std::find(d.begin(), d.end(), it->second);
                                    if (pos != d.end()) d.erase(pos);
                                }
                                if (d.empty()) {
                                    dead = true;
                                    break;
                                }
                                sub.push_back(ov);
                                sub_dom[ov] = std::move(d);
                            }
                            if (dead) {
                                all_ok = false;
                                break;
                            }
                            auto r = solve(g, sub, std::move(sub_dom));
                            if (!r) {
                                all_ok = false;
                                break;
                            }
                            for (auto& [v, c] : *r) joint[v] = c;
                        }
                        if (all_ok) return merge(std::move(joint));
                    }
                    // next assignment
                    std::size_t i = 0;
                    while (i < S.size()) {
                        if (++choice[i] < dom[act[S[i]]].size()) break;
                        choice[i] = 0;
                        ++i;
                    }
                    if (i == S.size()) break;
                }
                return std::nullopt;
            }
        }

        // (4) fallback: MRV backtracking on the subgraph
        ++trace.fallbacks;
        ListAssignment la;
        la.k = 0;
        la.lists.resize(n);
        for (int v = 0; v < n; ++v) {
            la.lists[v] = dom[act[v]];
            la.k = std::max(la.k, la.lists[v].empty() ? 0 : la.lists[v].back());
        }
        auto col = brute_list_coloring(h, la);
        if (!col) return std::nullopt;
        std::map<int, int> out;
        for (int v = 0; v < n; ++v) out[act[v]] = (*col)[v];
        return merge(std::move(out));
    }
};

// ---------------------------------------------------------------------------
// Min feedback vertex set

struct FvsSolver {
    const SolveConfig& cfg;
    SolveTrace trace;

    std::pair<long long, std::vector<int>> brute_on(const Graph& g, const std::vector<int>& act) {
        Graph h = g.induced(act);
        SolveConfig sub = cfg;
        sub.oracle_cap = std::max<long long>(cfg.oracle_cap, h.n());
        auto r = brute_solve(Problem::Fvs, h, sub);
        std::vector<int> set;
        for (int v : r.witness_set) set.push_back(act[v]);
        std::sort(set.begin(), set.end());
        return {r.optimum, set};
    }

    std::pair<long long, std::vector<int>> solve(const Graph& g, std::vector<int> act) {
        const int n = static_cast<int>(act.size());
        if (n <= 2) return {0, {}};
        Graph h = g.induced(act);
        if (is_forest(h)) return {0, {}};

        long long m = h.m();
        int t = ceil_cbrt(n);
        if (m >= fvs_edge_threshold(cfg, n) && t >= 2) {
            std::optional<Biclique> bk;
            try {
                bk = find_biclique(h, t, SearchStrategy::Exhaustive, cfg.work_cap);
            } catch (const CapExceeded&) {
                bk = find_biclique(h, t, SearchStrategy::Greedy);
            }
            if (bk) {
                ++trace.biclique_branches;
                long long best = -1;
                std::vector<int> best_set;
                for (int side = 0; side < 2; ++side) {
                    const auto& X = side == 0 ? bk->side_a : bk->side_b;
                    for (int spared : X) {
                        std::vector<int> into, rest_act;
                        for (int v : X)
                            if (v != spared) into.push_back(v);
                        std::vector<char> gone(n, 0);
                        for (int v : into) gone[v] = 1;
                        for (int v = 0; v < n; ++v)
                            if (!gone[v]) rest_act.push_back(act[v]);
                        auto r = solve(g, rest_act);
                        long long total = static_cast<long long>(into.size()) + r.first;
                        if (best == -1 || total < best) {
                            best = total;
                            best_set = r.second;
                            for (int v : into) best_set.push_back(act[v]);
                            std::sort(best_set.begin(), best_set.end());
                        }
                    }
                }
                return {best, best_set};
            }
        }

        auto sep = try_separator(h, cfg);
        if (sep && static_cast<int>(sep->vertices.size()) <= cfg.fvs_sep_cap &&
            !sep->vertices.empty()) {
            auto res = separator_case(g, act, h, sep->vertices);
            if (res) return *res;
        } else if (sep && sep->vertices.empty()) {
            // already disconnected into small components: recurse per component
            ++trace.separator_splits;
            auto comps = connected_components(h);
            if (comps.size() > 1) {
                long long total = 0;
                std::vector<int> set;
                for (const auto& comp : comps) {
                    std::vector<int> sub;
                    for (int v : comp) sub.push_back(act[v]);
                    auto r = solve(g, sub);
                    total += r.first;
                    set.insert(set.end(), r.second.begin(), r.second.end());
                }
                std::sort(set.begin(), set.end());
                return {total, set};
            }
        }

        ++trace.fallbacks;
        return brute_on(g, act);
    }

    // Separator divide-and-conquer. Enumerate the deleted subset D of S; the
    // kept separator vertices K must end up in a forest. Each side is solved
    // by brute force: every removal set whose kept part plus K is acyclic
    // yields a signature saying which K vertices it ties into one tree
    // (a partition of K). Signatures are glued across sides by a union-find
    // seeded with the K-K edges; a repeated tie is a cycle and is rejected.
    // This enumerates exactly the realizable same-tree partitions of K.
    std::optional<std::pair<long long, std::vector<int>>> separator_case(
        const Graph& g, const std::vector<int>& act, const Graph& h, const std::vector<int>& S) {
        (void)g;
        const int n = h.n();
        std::vector<char> in_s(n, 0);
        for (int v : S) in_s[v] = 1;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_s[v]) rest.push_back(v);
        Graph hr = h.induced(rest);
        auto comps = connected_components(hr);

        long long work = 0;
        for (const auto& c : comps) {
            if (c.size() > 14) return std::nullopt;
            work += 1LL << c.size();
        }
        if ((work << S.size()) > cfg.work_cap) return std::nullopt;
        ++trace.separator_splits;

        long long best = -1;
        std::vector<int> best_set;
        const std::size_t k = S.size();

        struct Option {
            std::vector<std::pair<int, int>> merges;  // union ops on K indices
            int size;
            std::vector<int> removed;  // h indices
        };

        for (std::uint64_t dmask = 0; dmask < (1ULL << k); ++dmask) {
            std::vector<int> D, K;
            for (std::size_t i = 0; i < k; ++i)
                ((dmask >> i) & 1 ? D : K).push_back(S[i]);
            if (best != -1 && static_cast<long long>(D.size()) >= best) continue;
            Graph hk = h.induced(K);
            if (!is_forest(hk)) continue;

            std::vector<int> k_index(n, -1);
            for (std::size_t i = 0; i < K.size(); ++i) k_index[K[i]] = static_cast<int>(i);

            auto find_root = [](std::vector<int>& uf, int x) {
                while (uf[x] != x) x = uf[x] = uf[uf[x]];
                return x;
            };

            bool comp_dead = false;
            std::vector<std::vector<Option>> options(comps.size());
            for (std::size_t c = 0; c < comps.size() && !comp_dead; ++c) {
                const auto& comp = comps[c];
                const int cs = static_cast<int>(comp.size());
                std::map<std::vector<std::pair<int, int>>, Option> pareto;
                for (std::uint64_t xmask = 0; xmask < (1ULL << cs); ++xmask) {
                    std::vector<int> kept_c, removed;
                    for (int i = 0; i < cs; ++i)
                        ((xmask >> i) & 1 ? removed : kept_c).push_back(rest[comp[i]]);
                    // union-find over kept_c + K with K-K edges skipped
                    std::vector<int> verts = kept_c;
                    verts.insert(verts.end(), K.begin(), K.end());
                    std::sort(verts.begin(), verts.end());
                    std::vector<int> local(n, -1), uf(verts.size());
                    for (std::size_t i = 0; i < verts.size(); ++i) {
                        local[verts[i]] = static_cast<int>(i);
                        uf[i] = static_cast<int>(i);
                    }
                    bool acyclic = true;
                    for (int u : verts) {
                        for (int w : h.neighbors(u)) {
                            if (w <= u || local[w] < 0) continue;
                            if (in_s[u] && in_s[w]) continue;  // K-K edges glue later
                            int ru = find_root(uf, local[u]);
                            int rw = find_root(uf, local[w]);
                            if (ru == rw) {
                                acyclic = false;
                                break;
                            }
                            uf[ru] = rw;
                        }
                        if (!acyclic) break;
                    }
                    if (!acyclic) continue;
                    std::map<int, std::vector<int>> classes;
                    for (std::size_t i = 0; i < K.size(); ++i)
                        classes[find_root(uf, local[K[i]])].push_back(static_cast<int>(i));
                    std::vector<std::pair<int, int>> merges;
                    for (auto& [root, members] : classes)
                        for (std::size_t i = 1; i < members.size(); ++i)
                            merges.emplace_back(members[0], members[i]);
                    auto it = pareto.find(merges);
                    if (it == pareto.end() || it->second.size > static_cast<int>(removed.size()))
                        pareto[merges] = Option{merges, static_cast<int>(removed.size()), removed};
                }
                if (pareto.empty()) {
                    comp_dead = true;
                    break;
                }
                for (auto& [sig, opt] : pareto) options[c].push_back(opt);
                std::sort(options[c].begin(), options[c].end(),
                          [](const Option& a, const Option& b) { return a.size < b.size; });
            }
            if (comp_dead) continue;

            // glue across components
            std::vector<int> base_uf(K.size());
            std::iota(base_uf.begin(), base_uf.end(), 0);
            bool base_ok = true;
            for (std::size_t i = 0; i < K.size() && base_ok; ++i)
                for (int w : h.neighbors(K[i])) {
                    if (k_index[w] < 0 || k_index[w] <= static_cast<int>(i)) continue;
                    int a = find_root(base_uf, static_cast<int>(i));
                    int b = find_root(base_uf, k_index[w]);
                    if (a == b) {
                        base_ok = false;  // cannot happen: is_forest(hk) held
                        break;
                    }
                    base_uf[a] = b;
                }
            if (!base_ok) continue;

            long long base_cost = static_cast<long long>(D.size());
            std::function<void(std::size_t, std::vector<int>&, long long, std::vector<int>&)> rec =
                [&](std::size_t c, std::vector<int>& uf, long long cost, std::vector<int>& removed) {
                    if (best != -1 && cost >= best) return;
                    if (c == comps.size()) {
                        best = cost;
                        best_set.clear();
                        for (int d : D) best_set.push_back(act[d]);
                        for (int v : removed) best_set.push_back(act[v]);
                        std::sort(best_set.begin(), best_set.end());
                        return;
                    }
                    for (const auto& opt : options[c]) {
                        if (best != -1 && cost + opt.size >= best) break;  // sorted by size
                        std::vector<int> uf2 = uf;
                        bool ok = true;
                        for (auto [a, b] : opt.merges) {
                            int ra = find_root(uf2, a), rb = find_root(uf2, b);
                            if (ra == rb) {
                                ok = false;
                                break;
                            }
                            uf2[ra] = rb;
                        }
                        if (!ok) continue;
                        std::size_t mark = removed.size();
                        removed.insert(removed.end(), opt.removed.begin(), opt.removed.end());
                        rec(c + 1, uf2, cost + opt.size, removed);
                        removed.resize(mark);
                    }
                };
            std::vector<int> removed;
            rec(0, base_uf, base_cost, removed);
        }

        if (best == -1) return std::nullopt;
        return std::make_pair(best, best_set);
    }
};

}  // namespace

SolveReport solve_mis_winwin(const Graph& g, const SolveConfig& cfg) {
    MisSolver s{cfg, {}};
    std::vector<int> act(g.n());
    std::iota(act.begin(), act.end(), 0);
    auto [opt, set] = s.solve(g, act);
    SolveReport r;
    r.optimum = opt;
    r.witness_set = set;
    r.feasible = true;
    r.trace = s.trace;
    return r;
}

SolveReport solve_list_kcol_winwin(const Graph& g, const ListAssignment& lists,
                                   const SolveConfig& cfg) {
    ColSolver s{cfg, {}};
    std::vector<int> act(g.n());
    std::iota(act.begin(), act.end(), 0);
    std::map<int, std::vector<int>> dom;
    for (int v = 0; v < g.n(); ++v) {
        auto l = lists.lists[v];
        std::sort(l.begin(), l.end());
        dom[v] = std::move(l);
    }
    auto res = s.solve(g, act, std::move(dom));
    SolveReport r;
    r.trace = s.trace;
    r.feasible = res.has_value();
    if (res) {
        r.witness_coloring.assign(g.n(), 0);
        for (auto& [v, c] : *res) r.witness_coloring[v] = c;
    }
    return r;
}

SolveReport solve_fvs_winwin(const Graph& g, const SolveConfig& cfg) {
    FvsSolver s{cfg, {}};
    std::vector<int> act(g.n());
    std::iota(act.begin(), act.end(), 0);
    auto [opt, set] = s.solve(g, act);
    SolveReport r;
    r.optimum = opt;
    r.witness_set = set;
    r.feasible = true;
    r.trace = s.trace;
    return r;
}

}  // namespace geostring
