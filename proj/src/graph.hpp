#ifndef HCDC_GRAPH_HPP
#define HCDC_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace hcdc {

// Undirected edge in canonical form, u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

// Normalizes endpoint order; rejects self-loops.
inline Edge make_edge(int a, int b) {
    if (a == b)
        throw error(errc::self_loop, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e);

// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists are
// sorted and the edge list is the canonical sorted set of (u<v) pairs, so
// every iteration over a Graph is deterministic.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int a, int b) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// Vertex-disjoint simple cycles, each stored as a cyclic vertex sequence in
// canonical form: rotated to start at its minimum vertex, oriented toward the
// smaller of that vertex's two cycle neighbors, and the list sorted by start
// vertex.
struct CycleSet {
    std::vector<std::vector<int>> cycles;

    bool empty() const { return cycles.empty(); }
    std::size_t size() const { return cycles.size(); }
    std::vector<Edge> edge_set() const;
};

// Rotates/orients one cyclic sequence into canonical form.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);

// All cut-edges of g, via one DFS low-link pass.
std::vector<Edge> bridges(const Graph& g);

// Partitions edge_subset into vertex-disjoint cycles. The subset must be
// 2-regular on its support; otherwise throws NotTwoRegular naming a violating
// vertex.
CycleSet cycle_decomposition(const Graph& g, const std::vector<Edge>& edge_subset);

// FNV-1a over "n:u-v,..." of the canonical edge list; stable id used to key
// verdicts and counterexample bundles.
std::uint64_t graph_hash(const Graph& g);
std::string graph_id(const Graph& g);

} // namespace hcdc

#endif
