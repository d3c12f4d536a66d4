#include "factor.hpp"

#include <algorithm>

namespace hcdc {

bool TwoFactor::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

TwoFactor two_factor_from_edges(const Graph& g, const std::vector<Edge>& edge_set) {
    TwoFactor f;
    f.edges = edge_set;
    std::sort(f.edges.begin(), f.edges.end());
    f.cycles = cycle_decomposition(g, f.edges);
    f.cycle_id.assign(g.n(), -1);
    for (std::size_t i = 0; i < f.cycles.cycles.size(); ++i)
        for (int v : f.cycles.cycles[i])
            f.cycle_id[v] = static_cast<int>(i);
    for (int v = 0; v < g.n(); ++v)
        if (f.cycle_id[v] == -1)
            throw error(errc::not_two_regular,
                        "vertex " + std::to_string(v) + " not spanned by the 2-factor");
    return f;
}

TwoFactor complement_two_factor(const Graph& g, const PerfectMatching& m) {
    if (!is_cubic(g))
        throw error(errc::not_bridgeless_cubic, "graph " + graph_id(g) + " is not cubic");
    if (!verify_matching(g, m))
        throw error(errc::inconsistent_inputs, "not a perfect matching of graph " + graph_id(g));
    std::vector<Edge> rest;
    rest.reserve(g.m() - m.pairs.size());
    for (const Edge& e : g.edges())
        if (m.partner[e.u] != e.v)
            rest.push_back(e);
    return two_factor_from_edges(g, rest);
}

MatchingPartition partition_matching(const TwoFactor& f, const PerfectMatching& m) {
    MatchingPartition p;
    for (const Edge& e : m.pairs) {
        if (e.v >= static_cast<int>(f.cycle_id.size()))
            throw error(errc::inconsistent_inputs, "matching edge " + to_string(e) +
                                                       " outside the factor's vertex range");
        if (f.cycle_id[e.u] != f.cycle_id[e.v])
            p.cross.push_back(e);
        else
            p.within.push_back(e);
    }
    return p;
}

int alternation_violation(const std::vector<int>& cycle, const PerfectMatching& m,
                          const TwoFactor& f) {
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        bool in_m = m.partner[a] == b;
        bool in_f = f.has_edge(make_edge(a, b));
        if (in_m == in_f)
            return static_cast<int>(i); // both (inconsistent inputs) or neither
        bool next_in_m = m.partner[b] == cycle[(i + 2) % k];
        if (in_m == next_in_m)
            return static_cast<int>(i);
    }
    return -1;
}

TwoFactor exchange(const TwoFactor& f, const CycleSet& c, const PerfectMatching& m) {
    if (c.empty())
        return f;

    std::vector<char> touched(f.cycle_id.size(), 0);
    std::vector<Edge> m_of_c, f_of_c;
    for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
        const auto& cyc = c.cycles[ci];
        if (cyc.size() < 4 || cyc.size() % 2 != 0)
            throw error(errc::not_alternating,
                        "cycle " + std::to_string(ci) + " has odd or too-small length " +
                            std::to_string(cyc.size()));
        int bad = alternation_violation(cyc, m, f);
        if (bad >= 0)
            throw error(errc::not_alternating,
                        "cycle " + std::to_string(ci) + " fails M/F alternation at pair (" +
                            std::to_string(cyc[bad]) + "," +
                            std::to_string(cyc[(bad + 1) % cyc.size()]) + ")");
        for (int v : cyc) {
            if (touched[v])
                throw error(errc::not_alternating,
                            "cycles are not vertex-disjoint at vertex " + std::to_string(v));
            touched[v] = 1;
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            Edge e = make_edge(a, b);
            if (m.partner[a] == b)
                m_of_c.push_back(e);
            else
                f_of_c.push_back(e);
        }
    }
    std::sort(f_of_c.begin(), f_of_c.end());

    std::vector<Edge> next;
    next.reserve(f.edges.size());
    for (const Edge& e : f.edges)
        if (!std::binary_search(f_of_c.begin(), f_of_c.end(), e))
            next.push_back(e);
    next.insert(next.end(), m_of_c.begin(), m_of_c.end());

    // Re-decompose; the alternation precondition guarantees 2-regularity, so
    // a failure here is an engine bug, not an input error.
    std::vector<int> deg(f.cycle_id.size(), 0);
    for (const Edge& e : next) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (std::size_t v = 0; v < deg.size(); ++v)
        if (deg[v] != 2)
            throw error(errc::exchange_broke_regularity,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]) +
                            " after exchange");
    Graph host = Graph::from_edge_list(static_cast<int>(f.cycle_id.size()), next);
    return two_factor_from_edges(host, next);
}

bool is_hamilton_cycle(const TwoFactor& f) {
    return f.cycles.size() == 1;
}

} // namespace hcdc
