#ifndef HCDC_MATCHING_HPP
#define HCDC_MATCHING_HPP

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace hcdc {

// A perfect matching: n/2 disjoint host edges covering every vertex.
// partner[v] is v's matched neighbor.
struct PerfectMatching {
    std::vector<Edge> pairs;
    std::vector<int> partner;
};

bool verify_matching(const Graph& g, const PerfectMatching& m);

// Lexicographically least perfect matching (ordered by the sorted pair list),
// by backtracking over the smallest uncovered vertex. Throws
// NoPerfectMatching if none exists; on a connected bridgeless cubic graph
// that would indicate a bug, which is exactly why it is surfaced loudly.
PerfectMatching perfect_matching(const Graph& g);

// Up to cap distinct perfect matchings in lexicographic order (the first one
// equals perfect_matching's output). Empty list if the graph has none.
std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g, std::size_t cap);

PerfectMatching matching_from_pairs(const Graph& g, const std::vector<Edge>& pairs);

} // namespace hcdc

#endif
