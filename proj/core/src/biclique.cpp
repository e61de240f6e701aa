#include "geostring/biclique.hpp"

#include <algorithm>
#include <cmath>

namespace geostring {

bool biclique_valid(const Graph& g, const Biclique& b) {
    if (b.side_a.size() != b.side_b.size() || b.side_a.empty()) return false;
    for (int a : b.side_a)
        for (int x : b.side_b) {
            if (a == x) return false;
            if (!g.has_edge(a, x)) return false;
        }
    return true;
}

namespace {

long long binom_capped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

// Common neighborhood of the set `a` (sorted), excluding members of `a`.
std::vector<int> common_neighbors(const Graph& g, const std::vector<int>& a) {
    std::vector<int> common = g.neighbors(a[0]);
    for (std::size_t i = 1; i < a.size() && !common.empty(); ++i) {
        const auto& nb = g.neighbors(a[i]);
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    std::vector<int> out;
    for (int v : common)
        if (!std::binary_search(a.begin(), a.end(), v)) out.push_back(v);
    return out;
}

std::optional<Biclique> exhaustive_bk(const Graph& g, int t, long long work_cap) {
    if (binom_capped(g.n(), t, work_cap) > work_cap)
        throw CapExceeded("biclique enumeration exceeds work cap; use greedy");
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    if (g.n() < 2 * t) return std::nullopt;
    while (true) {
        auto common = common_neighbors(g, idx);
        if (static_cast<int>(common.size()) >= t) {
            Biclique b;
            b.side_a = idx;
            b.side_b.assign(common.begin(), common.begin() + t);
            return b;
        }
        int i = t - 1;
        while (i >= 0 && idx[i] == g.n() - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

std::optional<Biclique> greedy_bk(const Graph& g, int t) {
    for (int seed = 0; seed < g.n(); ++seed) {
        std::vector<int> a{seed};
        while (static_cast<int>(a.size()) < t) {
            auto common = common_neighbors(g, a);
            if (static_cast<int>(common.size()) < t) break;
            // add the common neighbor keeping the largest next candidate pool
            int best = -1;
            std::size_t best_sz = 0;
            for (int v : common) {
                std::vector<int> trial = a;
                trial.insert(std::lower_bound(trial.begin(), trial.end(), v), v);
                auto c2 = common_neighbors(g, trial);
                if (best == -1 || c2.size() > best_sz) {
                    best = v;
                    best_sz = c2.size();
                }
            }
            if (best == -1) break;
            a.insert(std::lower_bound(a.begin(), a.end(), best), best);
        }
        if (static_cast<int>(a.size()) == t) {
            auto common = common_neighbors(g, a);
            if (static_cast<int>(common.size()) >= t) {
                Biclique b;
                b.side_a = a;
                b.side_b.assign(common.begin(), common.begin() + t);
                return b;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Biclique> find_biclique(const Graph& g, int t, SearchStrategy strategy,
                                      long long work_cap) {
    if (t < 1) throw std::invalid_argument("find_biclique: t must be >= 1");
    if (strategy == SearchStrategy::Exhaustive) return exhaustive_bk(g, t, work_cap);
    return greedy_bk(g, t);
}

std::optional<std::string> check_ktt_edge_bound(const Graph& g, int t, double c_check) {
    double bound = c_check * t * std::log2(t + 1.0) * g.n();
    if (static_cast<double>(g.m()) < bound) return std::nullopt;
    return "edge bound finding: m=" + std::to_string(g.m()) + " >= " +
           std::to_string(bound) + " with t=" + std::to_string(t) +
           " on n=" + std::to_string(g.n());
}

}  // namespace geostring
