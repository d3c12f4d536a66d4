#include "matching.hpp"

#include <algorithm>

namespace hcdc {

bool verify_matching(const Graph& g, const PerfectMatching& m) {
    if (g.n() % 2 != 0 || static_cast<int>(m.pairs.size()) != g.n() / 2)
        return false;
    std::vector<char> covered(g.n(), 0);
    for (const Edge& e : m.pairs) {
        if (e.u < 0 || e.v >= g.n() || e.u >= e.v)
            return false;
        if (!g.has_edge(e.u, e.v))
            return false;
        if (covered[e.u] || covered[e.v])
            return false;
        covered[e.u] = covered[e.v] = 1;
    }
    for (char c : covered)
        if (!c)
            return false;
    if (static_cast<int>(m.partner.size()) != g.n())
        return false;
    for (const Edge& e : m.pairs)
        if (m.partner[e.u] != e.v || m.partner[e.v] != e.u)
            return false;
    return true;
}

PerfectMatching matching_from_pairs(const Graph& g, const std::vector<Edge>& pairs) {
    PerfectMatching m;
    m.pairs = pairs;
    std::sort(m.pairs.begin(), m.pairs.end());
    m.partner.assign(g.n(), -1);
    for (const Edge& e : m.pairs) {
        m.partner[e.u] = e.v;
        m.partner[e.v] = e.u;
    }
    if (!verify_matching(g, m))
        throw error(errc::inconsistent_inputs, "pair list is not a perfect matching of the graph");
    return m;
}

namespace {

// Backtracking core: always matches the smallest uncovered vertex, trying its
// uncovered neighbors in ascending order, so solutions stream out in
// lexicographic order of their sorted pair lists. visit returns false to stop.
template <typename Visit>
void backtrack_matchings(const Graph& g, Visit&& visit) {
    const int n = g.n();
    if (n % 2 != 0)
        return;
    std::vector<int> partner(n, -1);
    std::vector<Edge> chosen;
    chosen.reserve(n / 2);
    bool stop = false;

    auto rec = [&](auto&& self, int from) -> void {
        if (stop)
            return;
        int u = from;
        while (u < n && partner[u] != -1)
            ++u;
        if (u == n) {
            stop = !visit(chosen);
            return;
        }
        for (int w : g.neighbors(u)) {
            if (partner[w] != -1)
                continue;
            partner[u] = w;
            partner[w] = u;
            chosen.push_back({u, w});
            self(self, u + 1);
            chosen.pop_back();
            partner[u] = -1;
            partner[w] = -1;
            if (stop)
                return;
        }
    };
    rec(rec, 0);
}

} // namespace

PerfectMatching perfect_matching(const Graph& g) {
    if (g.n() % 2 != 0)
        throw error(errc::no_perfect_matching, "odd vertex count " + std::to_string(g.n()));
    PerfectMatching out;
    bool found = false;
    backtrack_matchings(g, [&](const std::vector<Edge>& pairs) {
        out = matching_from_pairs(g, pairs);
        found = true;
        return false;
    });
    if (!found)
        throw error(errc::no_perfect_matching, "graph " + graph_id(g) + " on " +
                                                   std::to_string(g.n()) + " vertices");
    return out;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g, std::size_t cap) {
    std::vector<PerfectMatching> out;
    if (cap == 0)
        return out;
    backtrack_matchings(g, [&](const std::vector<Edge>& pairs) {
        out.push_back(matching_from_pairs(g, pairs));
        return out.size() < cap;
    });
    return out;
}

} // namespace hcdc
