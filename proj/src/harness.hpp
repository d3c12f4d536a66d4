#ifndef HCDC_HARNESS_HPP
#define HCDC_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hc.hpp"
#include "oracle.hpp"

namespace hcdc {

enum class Source { enumerated, random_graph, file };
const char* source_name(Source s);

// Summary of one driver run on one matching.
struct MatchingRun {
    int matching_index = 0;
    bool hc_found = false;
    Termination reason = Termination::dc_empty;
    int rounds = 0;
    std::vector<std::string> anomalies;
    long long dc_branch_nodes = 0;
    bool budget_exhausted = false;
    double wall_ms = 0.0;
};

// Probe of the symmetric-difference witness between the oracle's Hamilton
// cycle and the first matching's factor F0: it must decompose into
// vertex-disjoint alternating cycles whose union with F0 is connected, and we
// record (without asserting) whether it survives in the engine's first
// terminal state.
struct WitnessCheck {
    bool checked = false;
    bool valid = false;
    bool in_first_terminal = false;
    int cycles = 0;
};

struct Verdict {
    std::string graph_id;
    int n = 0;
    Source source = Source::file;
    std::string g6;
    bool skipped = false;
    std::string skip_reason;
    std::vector<MatchingRun> runs;
    int matchings_considered = 0;
    bool matchings_capped = false;
    std::optional<bool> oracle_hamiltonian; // absent when the oracle is off or over cap
    std::optional<std::vector<int>> oracle_certificate;
    std::optional<bool> agreement_some_matching;
    std::optional<bool> agreement_first_matching;
    WitnessCheck witness;
    bool soundness_ok = true;
    double wall_ms = 0.0;

    bool hc_found_some() const;
    std::optional<bool> hc_found_first() const; // absent unless matching 0 was run
};

struct HarnessConfig {
    HCConfig hc;
    bool oracle_on = true;
    int oracle_cap = 32;
    bool witness_check = true;
    // Strategy all: stop enumerating matchings once one finds a Hamilton
    // cycle. Both agreement readings are unaffected (matching 0 runs first).
    bool stop_on_success = true;
};

// Stable-name JSON record. Wall times are emitted only with include_times;
// the sweep keeps them out of verdicts.jsonl so identical corpus + config +
// seed reproduce it byte for byte.
nlohmann::json verdict_json(const Verdict& v, bool include_times);

// Runs the driver per the matching strategy, the oracle when within cap, the
// result validator, and the witness probe; every failure is data in the
// Verdict, never an exception. Graphs that are not connected bridgeless cubic
// come back skipped with a reason.
Verdict verify_instance(const Graph& g, const HarnessConfig& cfg, Source src = Source::file);

struct CorpusSpec {
    enum class Kind { enumerate_range, random_graphs, file };
    Kind kind = Kind::enumerate_range;
    int n_min = 4; // enumerate_range
    int n_max = 8;
    int n = 0; // random_graphs
    int count = 0;
    std::uint64_t seed = 0;
    std::string path; // file

    std::string describe() const;
};

struct SweepSummary {
    long long graphs = 0;
    long long skipped = 0;
    long long soundness_violations = 0;
    long long sufficiency_failures = 0;
    long long monotonicity_violations = 0;
    long long budget_exhausted_graphs = 0;
    int exit_code = 0; // 0 clean, 2 on any soundness violation
    nlohmann::json report;
};

// Runs every corpus graph through verify_instance and writes under out_dir:
// verdicts.jsonl (sorted by graph_id), report.json, metadata.json (times and
// timestamps live here), and counterexamples/<graph_id>/ bundles for every
// graph the oracle certifies Hamiltonian but no run cracked. jobs > 1
// distributes graphs across threads; outputs are identical regardless.
SweepSummary sweep(const CorpusSpec& corpus, const HarnessConfig& cfg, const std::string& out_dir,
                   int jobs = 1);

// Writes count seeded random bridgeless cubic graphs, one graph6 line each.
void generate_corpus(int n, int count, std::uint64_t seed, const std::string& path);

} // namespace hcdc

#endif
