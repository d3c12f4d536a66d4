#include "graph.hpp"

#include <algorithm>
#include <functional>

namespace hcdc {

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 1)
        throw error(errc::bad_argument, "vertex count must be >= 1, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw error(errc::self_loop, "edge " + to_string(e));
        Edge c = e.u < e.v ? e : Edge{e.v, e.u};
        if (c.u < 0 || c.v >= n)
            throw error(errc::index_out_of_range,
                        "edge " + to_string(e) + " with n=" + std::to_string(n));
        g.edges_.push_back(c);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (std::size_t i = 1; i < g.edges_.size(); ++i)
        if (g.edges_[i] == g.edges_[i - 1])
            throw error(errc::duplicate_edge, "edge " + to_string(g.edges_[i]));
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
        return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> CycleSet::edge_set() const {
    std::vector<Edge> out;
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i)
            out.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 3)
        throw error(errc::bad_argument, "cycle of length " + std::to_string(k));
    std::size_t at = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    int next = cycle[(at + 1) % k];
    int prev = cycle[(at + k - 1) % k];
    std::vector<int> out;
    out.reserve(k);
    if (next <= prev) {
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(cycle[(at + i) % k]);
    } else {
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(cycle[(at + k - i) % k]);
    }
    return out;
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3)
            return false;
    return true;
}

bool is_connected(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.n();
}

std::vector<Edge> bridges(const Graph& g) {
    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> out;
    int timer = 0;

    // Iterative DFS; parent tracked per vertex (simple graph, so a single
    // parent vertex suffices).
    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == f.parent) {
                    continue;
                }
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, p = f.parent;
                stack.pop_back();
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p])
                        out.push_back(make_edge(p, v));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleSet cycle_decomposition(const Graph& g, const std::vector<Edge>& edge_subset) {
    const int n = g.n();
    std::vector<std::vector<int>> nb(n);
    for (const Edge& e : edge_subset) {
        if (e.u < 0 || e.v >= n || e.u >= e.v)
            throw error(errc::bad_argument, "non-canonical edge " + to_string(e));
        if (!g.has_edge(e.u, e.v))
            throw error(errc::bad_argument, "edge " + to_string(e) + " not in host graph");
        nb[e.u].push_back(e.v);
        nb[e.v].push_back(e.u);
    }
    for (int v = 0; v < n; ++v) {
        if (!nb[v].empty() && nb[v].size() != 2)
            throw error(errc::not_two_regular,
                        "vertex " + std::to_string(v) + " has degree " +
                            std::to_string(nb[v].size()) + " in the edge subset");
        std::sort(nb[v].begin(), nb[v].end());
        if (nb[v].size() == 2 && nb[v][0] == nb[v][1])
            throw error(errc::not_two_regular,
                        "vertex " + std::to_string(v) + " repeats an incident subset edge");
    }

    CycleSet out;
    std::vector<char> used(n, 0);
    for (int s = 0; s < n; ++s) {
        if (used[s] || nb[s].empty())
            continue;
        // Walk from the minimum unused vertex toward its smaller neighbor;
        // this directly yields the canonical orientation.
        std::vector<int> cyc;
        int prev = -1, cur = s;
        do {
            cyc.push_back(cur);
            used[cur] = 1;
            int nxt = (nb[cur][0] != prev) ? nb[cur][0] : nb[cur][1];
            prev = cur;
            cur = nxt;
        } while (cur != s);
        out.cycles.push_back(std::move(cyc));
    }
    return out;
}

std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.n()));
    for (const Edge& e : g.edges()) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
    }
    return h;
}

std::string graph_id(const Graph& g) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = graph_hash(g);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = hex[h & 0xf];
        h >>= 4;
    }
    return s;
}

} // namespace hcdc
