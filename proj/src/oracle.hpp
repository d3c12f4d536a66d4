#ifndef HCDC_ORACLE_HPP
#define HCDC_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace hcdc {

struct OracleVerdict {
    bool hamiltonian = false;
    std::optional<std::vector<int>> certificate; // spanning cycle, canonical form
    long long nodes_explored = 0;
};

// Exact decision by backtracking from vertex 0 with degree pruning. Refuses
// graphs above the cap (default 32): beyond that the harness must not lean
// on oracle completeness.
OracleVerdict is_hamiltonian_bruteforce(const Graph& g, int cap = 32);

// Second, independent decision procedure: enumerates all (n-1)!/2 candidate
// vertex orders. Only sane for n <= 10; exists to cross-validate the
// backtracking oracle.
bool is_hamiltonian_permutation(const Graph& g);

// True iff cycle is a spanning cycle of g (used to audit certificates).
bool is_spanning_cycle(const Graph& g, const std::vector<int>& cycle);

// Streams every connected cubic graph on labeled vertices 0..n-1 exactly
// once, in a fixed order (backtracking that completes the smallest
// unfinished vertex with ascending neighbor sets). visit returns false to
// stop early.
void enumerate_cubic_graphs(int n, const std::function<bool(const Graph&)>& visit);

// Deterministic xorshift-free RNG wrapper: rejection-sampled bounded draws
// on top of a fixed 64-bit generator, so streams are identical across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Pairing-model sampling of a connected bridgeless cubic graph: three stubs
// per vertex, random pairing, reject loops/multi-edges/disconnection/bridges.
// Deterministic given the seed. Throws RetriesExhausted past the cap.
Graph random_cubic_bridgeless(int n, std::uint64_t seed, int max_retries = 10000);

} // namespace hcdc

#endif
