#ifndef HCDC_FACTOR_HPP
#define HCDC_FACTOR_HPP

#include <vector>

#include "graph.hpp"
#include "matching.hpp"

namespace hcdc {

// Spanning 2-regular subgraph, stored as its canonical cycle decomposition.
// cycle_id[v] is the index (into cycles.cycles) of the cycle through v.
struct TwoFactor {
    CycleSet cycles;
    std::vector<Edge> edges;   // sorted
    std::vector<int> cycle_id; // per vertex

    std::size_t cycle_count() const { return cycles.size(); }
    bool has_edge(const Edge& e) const;
};

// Split of a perfect matching against a 2-factor: cross edges join two
// distinct factor cycles, within edges have both ends on one cycle. The split
// is unique, so the "maximal" cross set is simply the full membership test.
struct MatchingPartition {
    std::vector<Edge> cross;  // ends on distinct cycles of F
    std::vector<Edge> within; // ends on the same cycle
};

// F := G - M for cubic g; always a spanning 2-regular subgraph.
TwoFactor complement_two_factor(const Graph& g, const PerfectMatching& m);

TwoFactor two_factor_from_edges(const Graph& g, const std::vector<Edge>& edges);

MatchingPartition partition_matching(const TwoFactor& f, const PerfectMatching& m);

// Exchange along a set of vertex-disjoint cycles that strictly alternate
// between matching edges and factor edges: the new factor is
// (E(F) \ F(C)) + M(C). Alternation is a hard precondition; without it the
// result need not be 2-regular. c may be empty (identity).
TwoFactor exchange(const TwoFactor& f, const CycleSet& c, const PerfectMatching& m);

bool is_hamilton_cycle(const TwoFactor& f);

// Checks the exchange precondition for one cycle; returns the index of the
// first offending consecutive pair, or -1 if the cycle alternates M/F.
int alternation_violation(const std::vector<int>& cycle, const PerfectMatching& m,
                          const TwoFactor& f);

} // namespace hcdc

#endif
