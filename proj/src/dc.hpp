#ifndef HCDC_DC_HPP
#define HCDC_DC_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "trace.hpp"

namespace hcdc {

// Caps for the branch-and-backtrack search and the terminal extraction.
// Step 13 has no evident polynomial algorithm, so every stage is budgeted;
// hitting a cap is reported as BudgetExhausted, never silently folded into
// "searched and found nothing".
struct DCBudget {
    long long branch_nodes = 100000; // fixpoint states visited
    long long cycle_cap = 10000;     // alternating cycles enumerated per terminal
    long long subset_cap = 10000;    // disjoint cycle subsets evaluated per terminal
    long long walk_steps = 1000000;  // DFS extension steps during cycle enumeration
};

// Resolution order for the terminal extraction's double minimum: fewest
// components of F union K' first (default), or fewest cycles in K' first.
enum class Objective { components_first, cycles_first };

struct DCOptions {
    DCBudget budget;
    Objective objective = Objective::components_first;
    TraceSink* trace = nullptr;
};

// One matched pair and its partition class. cross = ends on distinct cycles
// of F, within = ends on one cycle. Pairs are stored sorted by smaller
// endpoint; that order is the engine's deterministic scan order.
struct DCPair {
    int u = 0;
    int v = 0;
    bool cross = false;
    bool alive = true;
};

// Mutable working state of the cycle-detection engine: the working graph j
// (initially a full copy of G), the marked-edge set, and the live pairs.
// Matching edges are never marked and never individually deleted; they leave
// j only when rule 3 deletes both endpoints.
class DCState {
public:
    DCState(const Graph& g, const TwoFactor& f, const MatchingPartition& p);

    int n() const { return n_; }
    bool vertex_alive(int v) const { return alive_[v] != 0; }
    bool has_edge(int a, int b) const { return adj_[idx(a, b)] != 0; }
    bool is_marked(int a, int b) const { return marked_[idx(a, b)] != 0; }
    int degree(int v) const { return deg_[v]; }
    int partner(int v) const { return partner_[v]; }
    long long edge_count() const { return edge_count_; }
    long long marked_count() const { return marked_count_; }
    const std::vector<DCPair>& pairs() const { return pairs_; }
    int live_pair_count() const;
    std::vector<Edge> live_edges() const;

    // Engine internals; public so the rule functions below stay free.
    void delete_edge(int a, int b);
    void delete_vertex_pair(int pair_index);
    void mark_edge(int a, int b);
    bool has_marked_incident(int v) const;
    int pair_index_of(int v) const { return pair_of_[v]; }

private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(b);
    }

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::uint8_t> marked_;
    std::vector<std::uint8_t> alive_;
    std::vector<int> deg_;
    std::vector<int> partner_;
    std::vector<int> pair_of_;
    std::vector<DCPair> pairs_;
    long long edge_count_ = 0;
    long long marked_count_ = 0;
};

DCState init_dc_state(const Graph& g, const TwoFactor& f, const MatchingPartition& p);

// Runs the four deterministic rules to a fixpoint with strict priority:
// lowest rule first, rescan from rule 3 after every application. Scan order
// is pairs ascending by smaller endpoint, v1 before v2 within a pair.
//   rule 3: partner is the only neighbor -> drop the pair, delete both ends
//   rule 5: full degree with a marked incident edge -> delete its unmarked
//           non-partner edges
//   rule 7: degree 2 -> mark the unique non-partner edge
//   rule 9: cross pair end, full degree, unmarked, one neighbor in a cross
//           pair and the other in a within pair -> mark toward cross, delete
//           toward within
void apply_forcing_rules(DCState& s, TraceSink* trace = nullptr, long long* firings = nullptr);

// The binary branching rule: first cross-pair end with full degree and no
// marked incident edge. Its two non-partner neighbors w_lo < w_hi give the
// two alternatives (keep = mark one edge, delete the other).
struct BranchSite {
    int pivot = 0;
    int partner = 0;
    int w_lo = 0;
    int w_hi = 0;
};

std::optional<BranchSite> find_branch_site(const DCState& s);
void apply_branch(DCState& s, int pivot, int keep_w, int drop_w, TraceSink* trace = nullptr,
                  int depth = 0);

// The two child states of the branching rule (keep w_lo / keep w_hi), before
// any further forcing. Empty when no branch site exists.
std::optional<std::pair<DCState, DCState>> branch_children(const DCState& s);

struct ExtractResult {
    CycleSet cycles;
    bool budget_hit = false;
    long long cycles_enumerated = 0;
    long long subsets_examined = 0;
};

// Terminal extraction: enumerates simple cycles of the surviving graph that
// alternate between matching edges and factor edges, then searches
// vertex-disjoint subsets for the best objective value. Returns empty cycles
// when no nonempty subset lowers the component count of F union K' below
// F's own component count.
ExtractResult extract_exchange_set(const DCState& s, const TwoFactor& f, const DCOptions& opt);

struct DCStats {
    long long branch_nodes = 0;
    long long terminals = 0;
    long long rule_firings = 0;
    long long cycles_enumerated = 0;
    long long subsets_examined = 0;
    int max_depth = 0;
    std::vector<Edge> first_terminal_edges;
    bool have_first_terminal = false;
};

struct DCResult {
    CycleSet k_prime;                // empty when the search found nothing
    bool budget_exhausted = false;   // a cap fired somewhere along the way
    DCStats stats;
};

// Full engine: forcing to fixpoint, depth-first backtracking over the
// branching rule (alternatives stacked LIFO), terminal extraction at every
// leaf; returns the first nonempty extraction.
DCResult run_dc(const Graph& g, const TwoFactor& f, const MatchingPartition& p,
                const DCOptions& opt = {});

} // namespace hcdc

#endif
