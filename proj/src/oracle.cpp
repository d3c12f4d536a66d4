#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace hcdc {

bool is_spanning_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) != g.n() || g.n() < 3)
        return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.n() || seen[v])
            return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
            return false;
    return true;
}

OracleVerdict is_hamiltonian_bruteforce(const Graph& g, int cap) {
    if (g.n() > cap)
        throw error(errc::too_large,
                    "n=" + std::to_string(g.n()) + " exceeds oracle cap " + std::to_string(cap));
    OracleVerdict out;
    const int n = g.n();
    if (n < 3)
        return out;

    std::vector<int> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;

    // Degree prune: an unvisited vertex with fewer than 2 usable ends cannot
    // lie on a completion of the current path.
    std::vector<int> free_deg(n, 0);
    for (int v = 0; v < n; ++v)
        free_deg[v] = g.degree(v);

    auto rec = [&](auto&& self, int at) -> bool {
        ++out.nodes_explored;
        if (static_cast<int>(path.size()) == n)
            return g.has_edge(at, 0);
        for (int w : g.neighbors(at)) {
            if (used[w])
                continue;
            bool ok = true;
            used[w] = 1;
            for (int x : g.neighbors(w))
                --free_deg[x];
            // every unvisited vertex still needs two usable ends: edges to
            // other unvisited vertices, the fresh path endpoint w, or the
            // closing edge back to 0
            for (int x = 0; x < n && ok; ++x) {
                if (used[x])
                    continue;
                int ends = free_deg[x] + (g.has_edge(x, w) ? 1 : 0) +
                           (g.has_edge(x, 0) ? 1 : 0);
                ok = ends >= 2;
            }
            if (ok) {
                path.push_back(w);
                if (self(self, w))
                    return true;
                path.pop_back();
            }
            for (int x : g.neighbors(w))
                ++free_deg[x];
            used[w] = 0;
        }
        return false;
    };

    // free_deg counts edges to unvisited vertices; remove vertex 0 first.
    for (int x : g.neighbors(0))
        --free_deg[x];
    if (rec(rec, 0)) {
        out.hamiltonian = true;
        out.certificate = canonical_cycle(path);
    }
    return out;
}

bool is_hamiltonian_permutation(const Graph& g) {
    const int n = g.n();
    if (n < 3)
        return false;
    if (n > 11)
        throw error(errc::too_large, "permutation oracle is capped at n=11");
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (perm.front() > perm.back())
            continue; // each cycle twice (two directions); keep one
        bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
        for (int i = 0; ok && i + 1 < n - 1; ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void enumerate_cubic_graphs(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 4 || n % 2 != 0 || n > 14)
        throw error(errc::bad_argument,
                    "cubic enumeration needs even n in [4,14], got " + std::to_string(n));

    std::vector<int> deg(n, 0);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<Edge> edges;
    bool stop = false;

    // Complete the smallest unfinished vertex: all its missing neighbors are
    // larger, so every cubic graph appears exactly once.
    auto rec = [&](auto&& self) -> void {
        if (stop)
            return;
        int u = 0;
        while (u < n && deg[u] == 3)
            ++u;
        if (u == n) {
            Graph g = Graph::from_edge_list(n, edges);
            if (is_connected(g))
                stop = !visit(g);
            return;
        }
        int need = 3 - deg[u];
        std::vector<int> cands;
        for (int v = u + 1; v < n; ++v)
            if (deg[v] < 3 && !adj[u][v])
                cands.push_back(v);
        if (static_cast<int>(cands.size()) < need)
            return;
        std::vector<int> pick(need);
        auto choose = [&](auto&& chooser, int from, int got) -> void {
            if (stop)
                return;
            if (got == need) {
                for (int i = 0; i < need; ++i) {
                    int v = cands[pick[i]];
                    adj[u][v] = adj[v][u] = 1;
                    ++deg[u];
                    ++deg[v];
                    edges.push_back({u, v});
                }
                self(self);
                for (int i = need - 1; i >= 0; --i) {
                    int v = cands[pick[i]];
                    adj[u][v] = adj[v][u] = 0;
                    --deg[u];
                    --deg[v];
                    edges.pop_back();
                }
                return;
            }
            for (int i = from; i <= static_cast<int>(cands.size()) - (need - got); ++i) {
                pick[got] = i;
                chooser(chooser, i + 1, got + 1);
                if (stop)
                    return;
            }
        };
        choose(choose, 0, 0);
    };
    rec(rec);
}

Rng::Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0)
        throw error(errc::bad_argument, "bounded draw from an empty range");
    // rejection sampling, no modulo bias
    std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

Graph random_cubic_bridgeless(int n, std::uint64_t seed, int max_retries) {
    if (n < 4 || n % 2 != 0)
        throw error(errc::bad_argument,
                    "random cubic graph needs even n >= 4, got " + std::to_string(n));
    Rng rng(seed);
    std::vector<int> stubs(3 * n);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        for (int i = 0; i < 3 * n; ++i)
            stubs[i] = i / 3;
        // Fisher-Yates with the deterministic rng
        for (int i = 3 * n - 1; i > 0; --i) {
            int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<Edge> edges;
        bool bad = false;
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (int i = 0; i < 3 * n; i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b || adj[a][b]) {
                bad = true;
                break;
            }
            adj[a][b] = adj[b][a] = 1;
            edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
        }
        if (bad)
            continue;
        Graph g = Graph::from_edge_list(n, edges);
        if (!is_connected(g) || !bridges(g).empty())
            continue;
        return g;
    }
    throw error(errc::retries_exhausted, "no valid pairing after " + std::to_string(max_retries) +
                                             " attempts (n=" + std::to_string(n) + ")");
}

} // namespace hcdc
