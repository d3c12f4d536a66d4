#ifndef HCDC_HC_HPP
#define HCDC_HC_HPP

#include <string>
#include <vector>

#include "dc.hpp"
#include "factor.hpp"
#include "graph.hpp"
#include "matching.hpp"

namespace hcdc {

enum class MatchingStrategy { first, index, all };

struct HCConfig {
    MatchingStrategy strategy = MatchingStrategy::first;
    int matching_index = 0; // used by strategy index; first == index 0
    int matching_cap = 64;  // ceiling for strategy all
    DCBudget budget;
    Objective objective = Objective::components_first;
    int trace_level = 0;
    TraceSink* trace = nullptr;
};

enum class Termination { hamilton, dc_empty, iteration_cap, budget };

const char* termination_name(Termination t);

// One driver round: a cycle-detection run plus (when nonempty) the exchange.
struct RoundRecord {
    int round = 0;
    std::size_t k_prime_cycles = 0; // 0 when the engine returned empty
    CycleSet k_prime;
    int c_before = 0;
    int c_after = 0; // == c_before when no exchange was accepted
    bool accepted = false;
    bool monotonicity_violation = false;
    bool budget_exhausted = false;
    long long dc_branch_nodes = 0;
};

struct HCResult {
    TwoFactor final_factor;
    bool hamiltonian_found = false;
    Termination reason = Termination::dc_empty;
    std::vector<RoundRecord> rounds;
    std::vector<std::string> anomalies;       // e.g. MonotonicityViolation notes
    std::vector<Edge> first_terminal_edges;   // of round 0's first terminal state
    bool have_first_terminal = false;
    long long dc_branch_nodes_total = 0;
};

// The outer search loop, starting from the given perfect matching:
// F := G - M, partition M against F's cycles, then repeatedly ask the
// cycle-detection engine for an exchange set and exchange along it, at most
// n rounds. An exchange that fails to strictly lower the cycle count is
// rejected and recorded as a MonotonicityViolation finding.
HCResult run_hc(const Graph& g, const PerfectMatching& m, const HCConfig& cfg);

// Resolves the initial matching from cfg (strategy first / index).
HCResult run_hc(const Graph& g, const HCConfig& cfg);

// Soundness gate: the final factor is a spanning 2-regular subgraph of g,
// and a positive answer means it is a single spanning cycle.
bool validate_result(const Graph& g, const HCResult& r);

} // namespace hcdc

#endif
