#ifndef HCDC_TESTUTIL_HPP
#define HCDC_TESTUTIL_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "graph.hpp"
#include "matching.hpp"

// Named fixture graphs plus tiny brute-force reference implementations the
// real code is checked against.
namespace hcdc::testutil {

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph::from_edge_list(n, e);
}

inline Graph k4() {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// two triangles 012 / 345 joined by rungs 03, 14, 25
inline Graph prism() {
    return Graph::from_edge_list(
        6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph k33() {
    std::vector<Edge> e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            e.push_back({u, v});
    return Graph::from_edge_list(6, e);
}

// outer C5 0..4, spokes i-(i+5), inner pentagram 5..9
inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph::from_edge_list(10, e);
}

// triangles 012 / 345 joined by the single edge 2-3 (not cubic; n=6)
inline Graph two_triangles_bridged() {
    return Graph::from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

// smallest bridged cubic graph: two near-K4 blocks joined by the edge 4-9
inline Graph bridged_cubic() {
    return Graph::from_edge_list(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                                      {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
                                      {4, 9}});
}

// pentagon 01234 + triangle 567, chords 02, 15, 36, 47: cubic, bridgeless,
// Hamiltonian, and the matching {02,15,36,47} splits into one within edge
// (02) and three cross edges against the pentagon+triangle factor.
inline Graph pentagon_triangle() {
    return Graph::from_edge_list(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 6}, {6, 7},
                                     {5, 7}, {0, 2}, {1, 5}, {3, 6}, {4, 7}});
}

// pentagon_triangle relabeled so its lexicographically least perfect matching
// is the mixed one {01,23,45,67}, whose factor is a 5-cycle plus a 3-cycle.
inline Graph pentagon_triangle_shuffled() {
    return Graph::from_edge_list(8, {{0, 1}, {0, 2}, {0, 6}, {1, 2}, {1, 4}, {2, 3}, {3, 5},
                                     {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

// every perfect matching, by exhaustive subset search over the edge list
inline std::vector<std::vector<Edge>> all_matchings_bruteforce(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    if (g.n() % 2)
        return out;
    std::vector<Edge> cur;
    std::vector<char> used(g.n(), 0);
    const auto& edges = g.edges();
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(cur.size()) * 2 == g.n()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < edges.size(); ++i) {
            if (used[edges[i].u] || used[edges[i].v])
                continue;
            used[edges[i].u] = used[edges[i].v] = 1;
            cur.push_back(edges[i]);
            self(self, i + 1);
            cur.pop_back();
            used[edges[i].u] = used[edges[i].v] = 0;
        }
    };
    rec(rec, 0);
    for (auto& m : out)
        std::sort(m.begin(), m.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline int component_count(int n, const std::vector<Edge>& edges) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : edges)
        parent[find(e.u)] = find(e.v);
    int roots = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i)
            ++roots;
    return roots;
}

// bridges by the definition: removing the edge increases the component count
inline std::vector<Edge> bridges_bruteforce(const Graph& g) {
    std::vector<Edge> out;
    int base = component_count(g.n(), g.edges());
    for (const Edge& e : g.edges()) {
        std::vector<Edge> rest;
        for (const Edge& f : g.edges())
            if (!(f == e))
                rest.push_back(f);
        if (component_count(g.n(), rest) > base)
            out.push_back(e);
    }
    return out;
}

} // namespace hcdc::testutil

#endif
