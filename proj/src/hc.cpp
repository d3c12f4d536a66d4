#include "hc.hpp"

#include <algorithm>

namespace hcdc {

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::hamilton: return "hamilton";
        case Termination::dc_empty: return "dc_empty";
        case Termination::iteration_cap: return "iteration_cap";
        case Termination::budget: return "budget";
    }
    return "?";
}

namespace {

void require_valid_input(const Graph& g) {
    if (!is_cubic(g))
        throw error(errc::not_bridgeless_cubic, "graph " + graph_id(g) + " is not cubic");
    if (!is_connected(g))
        throw error(errc::not_bridgeless_cubic, "graph " + graph_id(g) + " is not connected");
    if (!bridges(g).empty())
        throw error(errc::not_bridgeless_cubic, "graph " + graph_id(g) + " has a bridge");
}

} // namespace

HCResult run_hc(const Graph& g, const PerfectMatching& m0, const HCConfig& cfg) {
    require_valid_input(g);
    if (!verify_matching(g, m0))
        throw error(errc::inconsistent_inputs, "initial matching invalid for " + graph_id(g));

    DCOptions dc_opt;
    dc_opt.budget = cfg.budget;
    dc_opt.objective = cfg.objective;
    dc_opt.trace = (cfg.trace && cfg.trace_level >= 2) ? cfg.trace : nullptr;

    HCResult res;
    PerfectMatching m = m0;
    TwoFactor f = complement_two_factor(g, m);
    res.reason = Termination::iteration_cap;

    const int max_rounds = g.n();
    for (int round = 0; round < max_rounds; ++round) {
        if (is_hamilton_cycle(f)) {
            res.reason = Termination::hamilton;
            break;
        }
        MatchingPartition part = partition_matching(f, m);
        DCResult dc = run_dc(g, f, part, dc_opt);
        res.dc_branch_nodes_total += dc.stats.branch_nodes;
        if (!res.have_first_terminal && dc.stats.have_first_terminal) {
            res.first_terminal_edges = dc.stats.first_terminal_edges;
            res.have_first_terminal = true;
        }

        RoundRecord rec;
        rec.round = round;
        rec.c_before = static_cast<int>(f.cycle_count());
        rec.c_after = rec.c_before;
        rec.k_prime_cycles = dc.k_prime.size();
        rec.k_prime = dc.k_prime;
        rec.budget_exhausted = dc.budget_exhausted;
        rec.dc_branch_nodes = dc.stats.branch_nodes;

        if (dc.k_prime.empty()) {
            res.rounds.push_back(std::move(rec));
            res.reason = dc.budget_exhausted ? Termination::budget : Termination::dc_empty;
            break;
        }

        TwoFactor next = exchange(f, dc.k_prime, m);
        rec.c_after = static_cast<int>(next.cycle_count());
        if (rec.c_after >= rec.c_before) {
            // The engine handed back a set whose exchange does not lower the
            // cycle count. Reject it, record the finding, stop this run.
            rec.monotonicity_violation = true;
            rec.c_after = rec.c_before;
            res.anomalies.push_back("MonotonicityViolation round " + std::to_string(round) +
                                    ": c " + std::to_string(rec.c_before) + " -> " +
                                    std::to_string(next.cycle_count()));
            res.rounds.push_back(std::move(rec));
            res.reason = Termination::dc_empty;
            break;
        }
        rec.accepted = true;
        f = std::move(next);

        if (cfg.trace && cfg.trace_level >= 1)
            cfg.trace->emit({{"graph_id", graph_id(g)},
                             {"matching_index", cfg.matching_index},
                             {"round", round},
                             {"c_before", rec.c_before},
                             {"c_after", rec.c_after},
                             {"k_prime_cycles", rec.k_prime_cycles}});
        res.rounds.push_back(std::move(rec));

        if (is_hamilton_cycle(f)) {
            res.reason = Termination::hamilton;
            break;
        }
        // M := E(G) \ E(F), repartition, reset the working graph (the next
        // engine run starts from a fresh copy of G with no marks).
        std::vector<Edge> rest;
        for (const Edge& e : g.edges())
            if (!f.has_edge(e))
                rest.push_back(e);
        m = matching_from_pairs(g, rest);
        if (!verify_matching(g, m))
            throw error(errc::internal_invariant_violation,
                        "factor complement is not a perfect matching on " + graph_id(g));
    }

    res.final_factor = std::move(f);
    res.hamiltonian_found = is_hamilton_cycle(res.final_factor);
    if (res.hamiltonian_found)
        res.reason = Termination::hamilton;
    if (cfg.trace && cfg.trace_level >= 1)
        cfg.trace->emit({{"graph_id", graph_id(g)},
                         {"matching_index", cfg.matching_index},
                         {"round", static_cast<int>(res.rounds.size())},
                         {"termination_reason", termination_name(res.reason)}});
    return res;
}

HCResult run_hc(const Graph& g, const HCConfig& cfg) {
    int index = cfg.strategy == MatchingStrategy::index ? cfg.matching_index : 0;
    if (index == 0)
        return run_hc(g, perfect_matching(g), cfg);
    auto list = enumerate_perfect_matchings(g, static_cast<std::size_t>(index) + 1);
    if (static_cast<int>(list.size()) <= index)
        throw error(errc::bad_argument, "matching index " + std::to_string(index) +
                                            " out of range; graph has only " +
                                            std::to_string(list.size()) + " perfect matchings");
    return run_hc(g, list[index], cfg);
}

bool validate_result(const Graph& g, const HCResult& r) {
    const TwoFactor& f = r.final_factor;
    if (static_cast<int>(f.cycle_id.size()) != g.n())
        return false;
    std::vector<int> deg(g.n(), 0);
    for (const Edge& e : f.edges) {
        if (!g.has_edge(e.u, e.v))
            return false;
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int v = 0; v < g.n(); ++v)
        if (deg[v] != 2)
            return false;
    // cycles must partition V
    std::vector<char> seen(g.n(), 0);
    for (const auto& c : f.cycles.cycles)
        for (int v : c) {
            if (v < 0 || v >= g.n() || seen[v])
                return false;
            seen[v] = 1;
        }
    for (char c : seen)
        if (!c)
            return false;
    if (r.hamiltonian_found != (f.cycles.size() == 1))
        return false;
    if (r.hamiltonian_found && static_cast<int>(f.cycles.cycles[0].size()) != g.n())
        return false;
    return true;
}

} // namespace hcdc
