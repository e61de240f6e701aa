#include "geostring/separator.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace geostring {

long long default_work_cap() {
    if (const char* env = std::getenv("GEOSTRING_WORKCAP")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 10'000'000;
}

bool separator_valid(const Graph& g, const std::vector<int>& vertices, const Rational& alpha) {
    std::vector<char> removed(g.n(), 0);
    for (int v : vertices) removed[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) keep.push_back(v);
    Graph rest = g.induced(keep);
    Rational bound = alpha * g.n();
    for (const auto& comp : connected_components(rest))
        if (Rational(static_cast<long long>(comp.size())) > bound) return false;
    return true;
}

namespace {

// C(n, k) capped so comparisons against work caps stay safe.
long long binom_capped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

std::optional<Separator> exhaustive_search(const Graph& g, int budget, const Rational& alpha,
                                           long long work_cap) {
    long long total = 0;
    for (int k = 0; k <= budget && k <= g.n(); ++k) {
        total += binom_capped(g.n(), k, work_cap);
        if (total > work_cap)
            throw CapExceeded("separator enumeration exceeds work cap; use greedy");
    }
    for (int k = 0; k <= budget && k <= g.n(); ++k) {
        std::vector<int> pick(k);
        // lexicographic k-subsets
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        if (k == 0) {
            if (separator_valid(g, {}, alpha)) return Separator{{}, alpha};
            continue;
        }
        while (true) {
            if (separator_valid(g, idx, alpha)) return Separator{idx, alpha};
            int i = k - 1;
            while (i >= 0 && idx[i] == g.n() - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<Separator> greedy_search(const Graph& g, int budget, const Rational& alpha) {
    std::optional<Separator> best;
    for (int start = 0; start < g.n(); ++start) {
        // Grow a BFS ball; whenever the ball holds between n/4 and 3n/4
        // vertices, try its open boundary as a separator.
        std::vector<int> dist(g.n(), -1);
        std::queue<int> q;
        q.push(start);
        dist[start] = 0;
        std::vector<int> ball;
        std::vector<char> in_ball(g.n(), 0);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            ball.push_back(v);
            in_ball[v] = 1;
            if (4 * static_cast<long long>(ball.size()) >= g.n() &&
                4 * static_cast<long long>(ball.size()) <= 3LL * g.n()) {
                std::vector<int> boundary;
                std::vector<char> in_b(g.n(), 0);
                for (int u : ball)
                    for (int w : g.neighbors(u))
                        if (!in_ball[w] && !in_b[w]) {
                            in_b[w] = 1;
                            boundary.push_back(w);
                        }
                std::sort(boundary.begin(), boundary.end());
                if (static_cast<int>(boundary.size()) <= budget &&
                    (!best || boundary.size() < best->vertices.size()) &&
                    separator_valid(g, boundary, alpha))
                    best = Separator{boundary, alpha};
            }
            for (int w : g.neighbors(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
    }
    return best;
}

}  // namespace

std::optional<Separator> find_balanced_separator(const Graph& g, int budget,
                                                 const Rational& alpha,
                                                 SearchStrategy strategy, long long work_cap) {
    if (budget < 0 || alpha <= 0 || alpha >= 1)
        throw std::invalid_argument("find_balanced_separator: bad budget or alpha");
    if (strategy == SearchStrategy::Exhaustive) return exhaustive_search(g, budget, alpha, work_cap);
    return greedy_search(g, budget, alpha);
}

}  // namespace geostring
