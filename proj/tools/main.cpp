#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../src/graph6.hpp"
#include "../src/harness.hpp"

namespace {

using namespace hcdc;

// 0 clean, 1 usage / I-O, 2 soundness or invariant breach
int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::internal_invariant_violation:
        case errc::exchange_broke_regularity:
        case errc::inconsistent_inputs:
        case errc::not_alternating:
            return 2;
        default:
            return 1;
    }
}

struct CommonOpts {
    std::string matching = "first";
    std::string oracle = "on";
    long long budget = DCBudget{}.branch_nodes;
    long long cycle_cap = DCBudget{}.cycle_cap;
    long long subset_cap = DCBudget{}.subset_cap;
    long long walk_steps = DCBudget{}.walk_steps;
    int matching_cap = 64;
    int oracle_cap = 32;
    std::string objective = "components-first";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--matching", o.matching, "matching strategy: all | first | <index>")
        ->capture_default_str();
    cmd->add_option("--oracle", o.oracle, "exact oracle on small graphs: on | off")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--budget", o.budget, "branch-node budget per engine run")
        ->capture_default_str();
    cmd->add_option("--cycle-cap", o.cycle_cap, "alternating cycles enumerated per terminal")
        ->capture_default_str();
    cmd->add_option("--subset-cap", o.subset_cap, "disjoint cycle subsets examined per terminal")
        ->capture_default_str();
    cmd->add_option("--walk-steps", o.walk_steps, "DFS steps during cycle enumeration")
        ->capture_default_str();
    cmd->add_option("--matching-cap", o.matching_cap, "matchings enumerated under --matching all")
        ->capture_default_str();
    cmd->add_option("--oracle-cap", o.oracle_cap, "largest n the oracle will attempt")
        ->capture_default_str();
    cmd->add_option("--objective", o.objective,
                    "extraction tie-break: components-first | cycles-first")
        ->check(CLI::IsMember({"components-first", "cycles-first"}))
        ->capture_default_str();
}

HarnessConfig to_config(const CommonOpts& o) {
    HarnessConfig cfg;
    if (o.matching == "all") {
        cfg.hc.strategy = MatchingStrategy::all;
    } else if (o.matching == "first") {
        cfg.hc.strategy = MatchingStrategy::first;
    } else {
        std::size_t used = 0;
        int idx = -1;
        try {
            idx = std::stoi(o.matching, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != o.matching.size() || idx < 0)
            throw error(errc::bad_argument,
                        "--matching expects all, first, or a non-negative index, got '" +
                            o.matching + "'");
        cfg.hc.strategy = MatchingStrategy::index;
        cfg.hc.matching_index = idx;
    }
    cfg.hc.matching_cap = o.matching_cap;
    cfg.hc.budget.branch_nodes = o.budget;
    cfg.hc.budget.cycle_cap = o.cycle_cap;
    cfg.hc.budget.subset_cap = o.subset_cap;
    cfg.hc.budget.walk_steps = o.walk_steps;
    cfg.hc.objective =
        o.objective == "cycles-first" ? Objective::cycles_first : Objective::components_first;
    cfg.oracle_on = o.oracle == "on";
    cfg.oracle_cap = o.oracle_cap;
    return cfg;
}

int run_check(const std::string& input, const CommonOpts& opts, const std::string& trace_path,
              int trace_level) {
    HarnessConfig cfg = to_config(opts);
    std::vector<Graph> graphs;
    if (std::filesystem::exists(input))
        graphs = read_graph_file(input);
    else
        graphs.push_back(parse_graph6(input));

    std::ofstream tf;
    TraceSink sink;
    if (!trace_path.empty()) {
        tf.open(trace_path);
        if (!tf)
            throw error(errc::io_error, "cannot write " + trace_path);
        sink.out = &tf;
        sink.level = trace_level;
        cfg.hc.trace = &sink;
        cfg.hc.trace_level = trace_level;
    }

    int code = 0;
    for (const Graph& g : graphs) {
        Verdict v = verify_instance(g, cfg, Source::file);
        std::cout << verdict_json(v, true).dump(2) << "\n";
        if (!v.soundness_ok)
            code = 2;
    }
    return code;
}

CorpusSpec parse_enumerate_range(const std::string& range) {
    CorpusSpec corpus;
    corpus.kind = CorpusSpec::Kind::enumerate_range;
    int lo = 0, hi = 0;
    char extra = 0;
    if (std::sscanf(range.c_str(), "%d..%d%c", &lo, &hi, &extra) == 2) {
        corpus.n_min = lo;
        corpus.n_max = hi;
    } else if (std::sscanf(range.c_str(), "%d%c", &lo, &extra) == 1) {
        corpus.n_min = corpus.n_max = lo;
    } else {
        throw error(errc::bad_argument, "--enumerate expects nmin..nmax, got '" + range + "'");
    }
    return corpus;
}

std::uint64_t parse_seed(const std::string& s) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw error(errc::bad_argument, "seed must be a non-negative integer, got '" + s + "'");
}

int parse_count(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size() && v > 0)
            return v;
    } catch (const std::exception&) {
    }
    throw error(errc::bad_argument, std::string(what) + " must be a positive integer, got '" + s +
                                        "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching-exchange Hamiltonicity procedure for cubic graphs: "
                 "checker, corpus sweeps, and corpus generation"};
    app.require_subcommand(1);

    // check
    auto* check_cmd = app.add_subcommand("check", "run one graph (graph6 string or file)");
    std::string check_input;
    check_cmd->add_option("input", check_input, "graph6 string, graph6 file, or edge-list file")
        ->required();
    CommonOpts check_opts;
    add_common(check_cmd, check_opts);
    std::string check_trace;
    int check_trace_level = 2;
    check_cmd->add_option("--trace", check_trace, "write a JSONL trace of every run here");
    check_cmd->add_option("--trace-level", check_trace_level,
                          "1 = driver rounds, 2 = every rule firing and branch")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run a whole corpus and write a report");
    std::string sweep_enumerate;
    std::vector<std::string> sweep_random;
    std::string sweep_file;
    auto* opt_enum = sweep_cmd->add_option("--enumerate", sweep_enumerate,
                                           "all connected labeled cubic graphs, nmin..nmax");
    auto* opt_rand =
        sweep_cmd->add_option("--random", sweep_random, "seeded random corpus: n count seed")
            ->expected(3);
    auto* opt_file = sweep_cmd->add_option("--file", sweep_file, "graph6 file, one graph per line");
    opt_enum->excludes(opt_rand)->excludes(opt_file);
    opt_rand->excludes(opt_file);
    CommonOpts sweep_opts;
    add_common(sweep_cmd, sweep_opts);
    std::string sweep_out = "out";
    int sweep_jobs = 1;
    sweep_cmd->add_option("--out", sweep_out, "output directory")->capture_default_str();
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "write a seeded random corpus as graph6 lines");
    std::vector<std::string> gen_random;
    gen_cmd->add_option("--random", gen_random, "n count seed")->expected(3)->required();
    std::string gen_out;
    gen_cmd->add_option("--out", gen_out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (check_cmd->parsed())
            return run_check(check_input, check_opts, check_trace, check_trace_level);
        if (sweep_cmd->parsed()) {
            CorpusSpec corpus;
            if (!sweep_enumerate.empty()) {
                corpus = parse_enumerate_range(sweep_enumerate);
            } else if (!sweep_random.empty()) {
                corpus.kind = CorpusSpec::Kind::random_graphs;
                corpus.n = parse_count(sweep_random[0], "n");
                corpus.count = parse_count(sweep_random[1], "count");
                corpus.seed = parse_seed(sweep_random[2]);
            } else if (!sweep_file.empty()) {
                corpus.kind = CorpusSpec::Kind::file;
                corpus.path = sweep_file;
            } else {
                std::cerr << "sweep needs one of --enumerate, --random, --file\n";
                return 1;
            }
            SweepSummary sum = sweep(corpus, to_config(sweep_opts), sweep_out, sweep_jobs);
            std::cout << sum.report.dump(2) << "\n";
            return sum.exit_code;
        }
        if (gen_cmd->parsed()) {
            generate_corpus(parse_count(gen_random[0], "n"), parse_count(gen_random[1], "count"),
                            parse_seed(gen_random[2]), gen_out);
            return 0;
        }
    } catch (const hcdc::error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
