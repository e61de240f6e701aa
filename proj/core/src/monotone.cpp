#include "geostring/monotone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace geostring {

int monotone_partition_bound(int length) {
    if (length <= 0) return 0;
    int m = (length + 2) / 3;
    // smallest z with z(z+1) >= 6m, i.e. ceil(sqrt(6m + 1/4) - 1/2)
    int z = 1;
    while (static_cast<long long>(z) * (z + 1) < 6LL * m) ++z;
    return z;
}

namespace {

// Longest monotone subsequence of the values at `pos`, O(L^2) DP; returns
// positions and whether it is increasing.
std::pair<std::vector<int>, bool> longest_monotone(const std::vector<int>& sigma,
                                                   const std::vector<int>& pos) {
    const int l = static_cast<int>(pos.size());
    std::vector<int> inc(l, 1), dec(l, 1), pinc(l, -1), pdec(l, -1);
    int bi = 0, bd = 0;
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < i; ++j) {
            if (sigma[pos[j]] < sigma[pos[i]] && inc[j] + 1 > inc[i]) {
                inc[i] = inc[j] + 1;
                pinc[i] = j;
            }
            if (sigma[pos[j]] > sigma[pos[i]] && dec[j] + 1 > dec[i]) {
                dec[i] = dec[j] + 1;
                pdec[i] = j;
            }
        }
        if (inc[i] > inc[bi]) bi = i;
        if (dec[i] > dec[bd]) bd = i;
    }
    bool use_inc = inc[bi] >= dec[bd];
    std::vector<int> out;
    int cur = use_inc ? bi : bd;
    while (cur != -1) {
        out.push_back(pos[cur]);
        cur = use_inc ? pinc[cur] : pdec[cur];
    }
    std::reverse(out.begin(), out.end());
    return {out, use_inc};
}

MonotonePartition greedy_peel(const std::vector<int>& sigma) {
    MonotonePartition mp;
    std::vector<int> pos(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) pos[i] = static_cast<int>(i);
    while (!pos.empty()) {
        auto [part, inc] = longest_monotone(sigma, pos);
        mp.parts.push_back(part);
        mp.increasing.push_back(inc);
        std::vector<int> next;
        std::set_difference(pos.begin(), pos.end(), part.begin(), part.end(),
                            std::back_inserter(next));
        pos = std::move(next);
    }
    return mp;
}

// Patience cover: piles are decreasing when covering by increasing runs and
// vice versa; pile count equals the opposite-direction longest subsequence.
MonotonePartition patience_cover(const std::vector<int>& sigma, bool increasing_parts) {
    MonotonePartition mp;
    std::vector<int> tops;  // value on top of each pile
    std::vector<std::vector<int>> piles;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        int v = sigma[i];
        std::size_t placed = piles.size();
        for (std::size_t p = 0; p < piles.size(); ++p) {
            bool fits = increasing_parts ? tops[p] < v : tops[p] > v;
            if (fits) {
                placed = p;
                break;
            }
        }
        if (placed == piles.size()) {
            piles.emplace_back();
            tops.push_back(0);
        }
        piles[placed].push_back(static_cast<int>(i));
        tops[placed] = v;
    }
    mp.parts = std::move(piles);
    mp.increasing.assign(mp.parts.size(), increasing_parts);
    return mp;
}

// Exact minimum monotone partition via subset-cover DP; L <= 20.
MonotonePartition exact_dp(const std::vector<int>& sigma) {
    const int l = static_cast<int>(sigma.size());
    const std::uint32_t full = (l == 32) ? ~0u : ((1u << l) - 1);
    // monotone[mask]: is the subsequence at mask monotone?
    auto mono_kind = [&](std::uint32_t mask) -> int {  // 0 no, 1 inc, 2 dec, 3 both
        int prev = -1;
        bool inc = true, dec = true;
        for (int i = 0; i < l; ++i) {
            if (!((mask >> i) & 1)) continue;
            if (prev != -1) {
                if (sigma[prev] > sigma[i]) inc = false;
                if (sigma[prev] < sigma[i]) dec = false;
            }
            prev = i;
        }
        return (inc ? 1 : 0) | (dec ? 2 : 0);
    };
    std::vector<int> dp(full + 1, 1 << 20);
    std::vector<std::uint32_t> take(full + 1, 0);
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int low = std::countr_zero(mask);
        // enumerate submasks containing the lowest set bit
        std::uint32_t rest = mask & ~(1u << low);
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t part = sub | (1u << low);
            if (mono_kind(part)) {
                if (dp[mask & ~part] + 1 < dp[mask]) {
                    dp[mask] = dp[mask & ~part] + 1;
                    take[mask] = part;
                }
            }
            if (sub == 0) break;
        }
    }
    MonotonePartition mp;
    std::uint32_t mask = full;
    while (mask) {
        std::uint32_t part = take[mask];
        std::vector<int> idx;
        for (int i = 0; i < l; ++i)
            if ((part >> i) & 1) idx.push_back(i);
        mp.parts.push_back(idx);
        mp.increasing.push_back((mono_kind(part) & 1) != 0);
        mask &= ~part;
    }
    return mp;
}

}  // namespace

bool monotone_partition_valid(const std::vector<int>& sigma, const MonotonePartition& mp) {
    std::vector<char> seen(sigma.size(), 0);
    if (mp.parts.size() != mp.increasing.size()) return false;
    for (std::size_t p = 0; p < mp.parts.size(); ++p) {
        const auto& part = mp.parts[p];
        if (part.empty()) return false;
        for (std::size_t i = 0; i < part.size(); ++i) {
            int x = part[i];
            if (x < 0 || x >= static_cast<int>(sigma.size()) || seen[x]) return false;
            seen[x] = 1;
            if (i > 0) {
                if (part[i - 1] >= x) return false;  // positions increasing
                if (mp.increasing[p] && sigma[part[i - 1]] >= sigma[x]) return false;
                if (!mp.increasing[p] && sigma[part[i - 1]] <= sigma[x]) return false;
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

MonotonePartition monotone_partition(const std::vector<int>& sigma) {
    if (sigma.empty()) return {};
    const int bound = monotone_partition_bound(static_cast<int>(sigma.size()));
    MonotonePartition best = greedy_peel(sigma);
    if (static_cast<int>(best.parts.size()) > bound) {
        for (bool inc : {true, false}) {
            auto pc = patience_cover(sigma, inc);
            if (pc.parts.size() < best.parts.size()) best = std::move(pc);
        }
    }
    if (static_cast<int>(best.parts.size()) > bound && sigma.size() <= 20) {
        auto ed = exact_dp(sigma);
        if (ed.parts.size() < best.parts.size()) best = std::move(ed);
    }
    if (static_cast<int>(best.parts.size()) > bound)
        throw std::runtime_error("monotone partition exceeds bound at length " +
                                 std::to_string(sigma.size()));
    return best;
}

}  // namespace geostring
