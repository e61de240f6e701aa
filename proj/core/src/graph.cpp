#include "geostring/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace geostring {

long long Graph::m() const {
    long long tot = 0;
    for (const auto& a : adj_) tot += static_cast<long long>(a.size());
    return tot / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v) return;  // no self-loops ever
    auto ins = [](std::vector<int>& a, int x) {
        auto it = std::lower_bound(a.begin(), a.end(), x);
        if (it == a.end() || *it != x) a.insert(it, x);
    };
    ins(adj_[u], v);
    ins(adj_[v], u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> where(n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) where[keep[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(keep.size()));
    if (!names.empty()) h.names.resize(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (!names.empty()) h.names[i] = names[keep[i]];
        for (int w : adj_[keep[i]])
            if (where[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), where[w]);
    }
    return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s}, cur;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            cur.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(cur.begin(), cur.end());
        out.push_back(std::move(cur));
    }
    // components ordered by smallest contained id: BFS from increasing s
    // already yields that order.
    return out;
}

bool is_forest(const Graph& g) {
    long long edges = g.m();
    auto comps = connected_components(g);
    return edges == g.n() - static_cast<long long>(comps.size());
}

void write_graph(std::ostream& os, const Graph& g) {
    os << "graph " << g.n() << " " << g.m() << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) {
                const std::string nu = g.names.empty() ? complete_name(u) : g.names[u];
                const std::string nv = g.names.empty() ? complete_name(v) : g.names[v];
                os << "e " << nu << " " << nv << "\n";
            }
}

Graph read_graph(std::istream& is) {
    std::string line;
    Graph g;
    std::map<std::string, int> index;
    long long m_declared = -1, m_seen = 0;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw) || kw[0] == '#') continue;
        if (kw == "graph") {
            int n;
            if (!(ss >> n >> m_declared) || n < 0)
                throw std::runtime_error("graph header malformed at line " + std::to_string(lineno));
            g = Graph(n);
            g.names.assign(n, "");
            have_header = true;
        } else if (kw == "e") {
            std::string a, b;
            if (!have_header || !(ss >> a >> b))
                throw std::runtime_error("edge line malformed at line " + std::to_string(lineno));
            auto id_of = [&](const std::string& s) {
                auto it = index.find(s);
                if (it != index.end()) return it->second;
                int id = static_cast<int>(index.size());
                if (id >= g.n())
                    throw std::runtime_error("more ids than declared at line " + std::to_string(lineno));
                index.emplace(s, id);
                g.names[id] = s;
                return id;
            };
            g.add_edge(id_of(a), id_of(b));
            ++m_seen;
        } else {
            throw std::runtime_error("unknown graph line at line " + std::to_string(lineno));
        }
    }
    if (!have_header) throw std::runtime_error("missing graph header");
    for (int i = 0; i < g.n(); ++i)
        if (g.names[i].empty()) g.names[i] = complete_name(i);
    if (m_declared >= 0 && m_declared != m_seen && m_declared != g.m())
        throw std::runtime_error("edge count mismatch in graph file");
    return g;
}

std::string complete_name(int i) { return "v" + std::to_string(i); }

}  // namespace geostring
