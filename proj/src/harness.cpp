#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "factor.hpp"
#include "graph6.hpp"

namespace hcdc {

namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

const char* source_name(Source s) {
    switch (s) {
        case Source::enumerated: return "enumerated";
        case Source::random_graph: return "random";
        case Source::file: return "file";
    }
    return "?";
}

bool Verdict::hc_found_some() const {
    return std::any_of(runs.begin(), runs.end(), [](const MatchingRun& r) { return r.hc_found; });
}

std::optional<bool> Verdict::hc_found_first() const {
    for (const auto& r : runs)
        if (r.matching_index == 0)
            return r.hc_found;
    return std::nullopt;
}

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

const char* strategy_name(MatchingStrategy s) {
    switch (s) {
        case MatchingStrategy::first: return "first";
        case MatchingStrategy::index: return "index";
        case MatchingStrategy::all: return "all";
    }
    return "?";
}

struct MatchingChoice {
    std::vector<PerfectMatching> list;
    std::vector<int> indices; // matching_index per entry
    bool capped = false;
    int considered = 0;
};

MatchingChoice choose_matchings(const Graph& g, const HCConfig& hc) {
    MatchingChoice out;
    if (hc.strategy == MatchingStrategy::first) {
        out.list.push_back(perfect_matching(g));
        out.indices.push_back(0);
        out.considered = 1;
    } else if (hc.strategy == MatchingStrategy::index) {
        auto ms = enumerate_perfect_matchings(g, static_cast<std::size_t>(hc.matching_index) + 1);
        if (static_cast<int>(ms.size()) <= hc.matching_index)
            throw error(errc::bad_argument, "matching index " + std::to_string(hc.matching_index) +
                                                " out of range (graph has " +
                                                std::to_string(ms.size()) + ")");
        out.list.push_back(std::move(ms.back()));
        out.indices.push_back(hc.matching_index);
        out.considered = 1;
    } else {
        // one past the cap, so "capped" is exact rather than a guess
        auto ms = enumerate_perfect_matchings(g, static_cast<std::size_t>(hc.matching_cap) + 1);
        out.capped = static_cast<int>(ms.size()) > hc.matching_cap;
        if (out.capped)
            ms.pop_back();
        out.list = std::move(ms);
        out.considered = static_cast<int>(out.list.size());
        out.indices.resize(out.list.size());
        std::iota(out.indices.begin(), out.indices.end(), 0);
    }
    return out;
}

WitnessCheck witness_probe(const Graph& g, const PerfectMatching& m0, const std::vector<int>& cert,
                           const HCResult* first_run) {
    WitnessCheck w;
    TwoFactor f0 = complement_two_factor(g, m0);
    if (f0.cycle_count() <= 1)
        return w; // F0 is itself a Hamilton cycle; nothing to witness

    w.checked = true;
    std::vector<Edge> h_edges;
    h_edges.reserve(cert.size());
    for (std::size_t i = 0; i < cert.size(); ++i)
        h_edges.push_back(make_edge(cert[i], cert[(i + 1) % cert.size()]));
    std::sort(h_edges.begin(), h_edges.end());

    std::vector<Edge> delta;
    std::set_symmetric_difference(h_edges.begin(), h_edges.end(), f0.edges.begin(),
                                  f0.edges.end(), std::back_inserter(delta));
    try {
        CycleSet ks = cycle_decomposition(g, delta);
        w.cycles = static_cast<int>(ks.size());
        bool ok = !ks.cycles.empty();
        for (const auto& cyc : ks.cycles)
            if (alternation_violation(cyc, m0, f0) != -1)
                ok = false;

        // connectivity of F0 together with the witness cycles
        std::vector<int> parent(g.n());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Edge& e : f0.edges)
            parent[find(e.u)] = find(e.v);
        for (const Edge& e : delta)
            parent[find(e.u)] = find(e.v);
        int roots = 0;
        for (int v = 0; v < g.n(); ++v)
            if (find(v) == v)
                ++roots;
        w.valid = ok && roots == 1;

        if (first_run && first_run->have_first_terminal) {
            std::vector<Edge> term = first_run->first_terminal_edges;
            std::sort(term.begin(), term.end());
            w.in_first_terminal =
                std::includes(term.begin(), term.end(), delta.begin(), delta.end());
        }
    } catch (const error&) {
        w.valid = false; // the difference failed to decompose into disjoint cycles
    }
    return w;
}

} // namespace

Verdict verify_instance(const Graph& g, const HarnessConfig& cfg, Source src) {
    Verdict v;
    v.graph_id = graph_id(g);
    v.n = g.n();
    v.source = src;
    v.g6 = encode_graph6(g);
    const auto t0 = clock_type::now();
    auto finish = [&]() -> Verdict& {
        v.wall_ms = ms_since(t0);
        return v;
    };

    if (!is_cubic(g)) {
        v.skipped = true;
        v.skip_reason = "NotCubic";
        return finish();
    }
    if (!is_connected(g)) {
        v.skipped = true;
        v.skip_reason = "NotConnected";
        return finish();
    }
    if (!bridges(g).empty()) {
        v.skipped = true;
        v.skip_reason = "NotBridgeless";
        return finish();
    }

    std::optional<HCResult> first_result;
    std::optional<PerfectMatching> first_matching;
    try {
        MatchingChoice mc = choose_matchings(g, cfg.hc);
        v.matchings_considered = mc.considered;
        v.matchings_capped = mc.capped;
        for (std::size_t i = 0; i < mc.list.size(); ++i) {
            HCConfig per = cfg.hc;
            per.matching_index = mc.indices[i];
            const auto r0 = clock_type::now();
            HCResult hr = run_hc(g, mc.list[i], per);
            MatchingRun run;
            run.matching_index = mc.indices[i];
            run.hc_found = hr.hamiltonian_found;
            run.reason = hr.reason;
            run.rounds = static_cast<int>(hr.rounds.size());
            run.anomalies = hr.anomalies;
            run.dc_branch_nodes = hr.dc_branch_nodes_total;
            run.budget_exhausted = hr.reason == Termination::budget;
            for (const auto& rr : hr.rounds)
                run.budget_exhausted = run.budget_exhausted || rr.budget_exhausted;
            run.wall_ms = ms_since(r0);
            if (!validate_result(g, hr)) {
                v.soundness_ok = false;
                run.anomalies.push_back("InvalidResult");
            }
            if (mc.indices[i] == 0 && !first_result) {
                first_result = hr;
                first_matching = mc.list[i];
            }
            const bool found = run.hc_found;
            v.runs.push_back(std::move(run));
            if (found && cfg.stop_on_success)
                break;
        }

        if (cfg.oracle_on && g.n() <= cfg.oracle_cap) {
            OracleVerdict ov = is_hamiltonian_bruteforce(g, cfg.oracle_cap);
            if (ov.certificate && !is_spanning_cycle(g, *ov.certificate))
                v.soundness_ok = false; // certificate must self-verify
            v.oracle_hamiltonian = ov.hamiltonian;
            v.oracle_certificate = ov.certificate;
            v.agreement_some_matching = v.hc_found_some() == ov.hamiltonian;
            if (auto f = v.hc_found_first())
                v.agreement_first_matching = *f == ov.hamiltonian;
            if (v.hc_found_some() && !ov.hamiltonian)
                v.soundness_ok = false; // claimed a cycle on a non-Hamiltonian graph
            if (cfg.witness_check && ov.hamiltonian && ov.certificate && first_matching)
                v.witness = witness_probe(g, *first_matching, *ov.certificate,
                                          first_result ? &*first_result : nullptr);
        }
    } catch (const error& e) {
        switch (e.code()) {
            case errc::internal_invariant_violation:
            case errc::exchange_broke_regularity:
            case errc::not_alternating:
            case errc::inconsistent_inputs:
                v.soundness_ok = false;
                v.skip_reason = e.what();
                break;
            default:
                v.skipped = true;
                v.skip_reason = e.what();
                break;
        }
    }
    return finish();
}

nlohmann::json verdict_json(const Verdict& v, bool include_times) {
    nlohmann::json jruns = nlohmann::json::array();
    for (const auto& r : v.runs) {
        jruns.push_back({
            {"matching_index", r.matching_index},
            {"hc_found", r.hc_found},
            {"termination_reason", termination_name(r.reason)},
            {"rounds", r.rounds},
            {"anomalies", r.anomalies},
            {"dc_branch_nodes", r.dc_branch_nodes},
            {"budget_exhausted", r.budget_exhausted},
        });
    }
    nlohmann::json j{
        {"graph_id", v.graph_id},
        {"n", v.n},
        {"source", source_name(v.source)},
        {"g6", v.g6},
        {"skipped", v.skipped},
        {"runs", std::move(jruns)},
        {"matchings_considered", v.matchings_considered},
        {"matchings_capped", v.matchings_capped},
        {"soundness_ok", v.soundness_ok},
    };
    if (!v.skip_reason.empty())
        j["skip_reason"] = v.skip_reason;
    j["oracle_hamiltonian"] =
        v.oracle_hamiltonian ? nlohmann::json(*v.oracle_hamiltonian) : nlohmann::json(nullptr);
    if (v.oracle_certificate)
        j["oracle_certificate"] = *v.oracle_certificate;
    j["agreement_some_matching"] = v.agreement_some_matching
                                       ? nlohmann::json(*v.agreement_some_matching)
                                       : nlohmann::json(nullptr);
    j["agreement_first_matching"] = v.agreement_first_matching
                                        ? nlohmann::json(*v.agreement_first_matching)
                                        : nlohmann::json(nullptr);
    j["witness"] = {
        {"checked", v.witness.checked},
        {"valid", v.witness.valid},
        {"in_first_terminal", v.witness.in_first_terminal},
        {"cycles", v.witness.cycles},
    };
    if (include_times) {
        nlohmann::json per = nlohmann::json::array();
        for (const auto& r : v.runs)
            per.push_back(r.wall_ms);
        j["wall_times"] = {{"total_ms", v.wall_ms}, {"per_matching_ms", std::move(per)}};
    }
    return j;
}

std::string CorpusSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::enumerate_range:
            os << "enumerate n=" << n_min << ".." << n_max << " (connected labeled cubic graphs)";
            break;
        case Kind::random_graphs:
            os << "random n=" << n << " count=" << count << " seed=" << seed;
            break;
        case Kind::file:
            os << "file " << path;
            break;
    }
    return os.str();
}

namespace {

struct CorpusItem {
    std::string g6;
    Source src = Source::file;
};

std::vector<CorpusItem> materialize(const CorpusSpec& c) {
    std::vector<CorpusItem> items;
    switch (c.kind) {
        case CorpusSpec::Kind::enumerate_range:
            if (c.n_min > c.n_max || c.n_min < 4 || c.n_max > 14 || c.n_min % 2 || c.n_max % 2)
                throw error(errc::bad_argument, "enumeration range needs even bounds within 4..14, got " +
                                                    std::to_string(c.n_min) + ".." +
                                                    std::to_string(c.n_max));
            for (int n = c.n_min; n <= c.n_max; n += 2)
                enumerate_cubic_graphs(n, [&](const Graph& g) {
                    items.push_back({encode_graph6(g), Source::enumerated});
                    return true;
                });
            break;
        case CorpusSpec::Kind::random_graphs: {
            if (c.count <= 0)
                throw error(errc::bad_argument, "random corpus needs count > 0");
            Rng master(c.seed);
            for (int i = 0; i < c.count; ++i)
                items.push_back(
                    {encode_graph6(random_cubic_bridgeless(c.n, master.next())), Source::random_graph});
            break;
        }
        case CorpusSpec::Kind::file:
            for (const Graph& g : read_graph_file(c.path))
                items.push_back({encode_graph6(g), Source::file});
            break;
    }
    return items;
}

template <class T>
double median_of(std::vector<T> xs) {
    if (xs.empty())
        return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    if (xs.size() % 2)
        return static_cast<double>(xs[mid]);
    return (static_cast<double>(xs[mid - 1]) + static_cast<double>(xs[mid])) / 2.0;
}

std::string iso_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_bundle(const Graph& g, const Verdict& v, const HarnessConfig& cfg,
                  const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw error(errc::io_error, "cannot create " + dir.string() + ": " + ec.message());
    {
        std::ofstream f(dir / "graph.g6");
        f << v.g6 << '\n';
    }
    {
        std::ofstream f(dir / "verdict.json");
        f << verdict_json(v, true).dump(2) << '\n';
    }
    MatchingChoice mc = choose_matchings(g, cfg.hc);
    {
        std::ofstream f(dir / "matchings.txt");
        for (std::size_t i = 0; i < mc.list.size(); ++i) {
            f << mc.indices[i] << ':';
            for (const Edge& e : mc.list[i].pairs)
                f << ' ' << to_string(e);
            f << '\n';
        }
    }
    if (v.oracle_certificate) {
        std::ofstream f(dir / "certificate.txt");
        for (std::size_t i = 0; i < v.oracle_certificate->size(); ++i)
            f << (i ? " " : "") << (*v.oracle_certificate)[i];
        f << '\n';
    }
    {
        // replay with full tracing; same matchings, same config
        std::ofstream f(dir / "trace.jsonl");
        TraceSink sink{&f, 2};
        for (std::size_t i = 0; i < mc.list.size(); ++i) {
            HCConfig per = cfg.hc;
            per.matching_index = mc.indices[i];
            per.trace = &sink;
            per.trace_level = 2;
            run_hc(g, mc.list[i], per);
        }
    }
}

} // namespace

SweepSummary sweep(const CorpusSpec& corpus, const HarnessConfig& cfg, const std::string& out_dir,
                   int jobs) {
    const auto sweep_t0 = clock_type::now();
    const std::vector<CorpusItem> items = materialize(corpus);

    HarnessConfig worker_cfg = cfg;
    worker_cfg.hc.trace = nullptr; // traces are produced only inside bundles
    worker_cfg.hc.trace_level = 0;

    std::vector<Verdict> verdicts(items.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            verdicts[i] = verify_instance(parse_graph6(items[i].g6), worker_cfg, items[i].src);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
                verdicts[i] = verify_instance(parse_graph6(items[i].g6), worker_cfg, items[i].src);
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }

    // Deterministic output order regardless of scheduling: by graph_id, then
    // by corpus position for duplicate graphs.
    std::vector<std::size_t> order(verdicts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (verdicts[a].graph_id != verdicts[b].graph_id)
            return verdicts[a].graph_id < verdicts[b].graph_id;
        return a < b;
    });

    fs::path out(out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec)
        throw error(errc::io_error, "cannot create " + out.string() + ": " + ec.message());
    {
        std::ofstream vf(out / "verdicts.jsonl");
        if (!vf)
            throw error(errc::io_error, "cannot write " + (out / "verdicts.jsonl").string());
        for (std::size_t i : order)
            vf << verdict_json(verdicts[i], false).dump() << '\n';
    }

    SweepSummary sum;
    sum.graphs = static_cast<long long>(items.size());
    std::map<int, std::vector<double>> wall_by_n;
    std::map<int, std::vector<long long>> nodes_by_n;
    std::map<int, long long> budget_by_n, graphs_by_n;
    long long oracle_checked = 0, oracle_true = 0;
    long long agree_some = 0, agree_some_total = 0, agree_first = 0, agree_first_total = 0;
    long long hc_some = 0, runs_total = 0;
    long long witness_checked = 0, witness_valid = 0, witness_in_terminal = 0;
    nlohmann::json fail_list = nlohmann::json::array();
    nlohmann::json mono_list = nlohmann::json::array();

    std::map<std::string, int> bundle_ids;
    std::map<std::string, int> anomaly_ids;
    for (std::size_t i : order) {
        const Verdict& v = verdicts[i];
        if (v.skipped) {
            ++sum.skipped;
            continue;
        }
        if (!v.soundness_ok)
            ++sum.soundness_violations;
        runs_total += static_cast<long long>(v.runs.size());
        ++graphs_by_n[v.n];
        wall_by_n[v.n].push_back(v.wall_ms);
        long long nodes = 0;
        bool budget_hit = false;
        std::vector<nlohmann::json> mono_here;
        for (const auto& r : v.runs) {
            nodes += r.dc_branch_nodes;
            budget_hit = budget_hit || r.budget_exhausted;
            for (const auto& a : r.anomalies)
                if (a.rfind("MonotonicityViolation", 0) == 0) {
                    ++sum.monotonicity_violations;
                    mono_here.push_back({{"graph_id", v.graph_id},
                                         {"matching_index", r.matching_index},
                                         {"note", a}});
                }
        }
        if (!mono_here.empty()) {
            // a rejected exchange is a finding; keep a replayable trace of it
            std::string id = v.graph_id;
            int dup = anomaly_ids[id]++;
            if (dup)
                id += "-" + std::to_string(dup);
            write_bundle(parse_graph6(v.g6), v, worker_cfg, out / "anomalies" / id);
            for (auto& entry : mono_here) {
                entry["bundle"] = "anomalies/" + id;
                mono_list.push_back(std::move(entry));
            }
        }
        nodes_by_n[v.n].push_back(nodes);
        if (budget_hit) {
            ++sum.budget_exhausted_graphs;
            ++budget_by_n[v.n];
        }
        if (v.hc_found_some())
            ++hc_some;
        if (v.oracle_hamiltonian) {
            ++oracle_checked;
            if (*v.oracle_hamiltonian)
                ++oracle_true;
            if (v.agreement_some_matching) {
                ++agree_some_total;
                if (*v.agreement_some_matching)
                    ++agree_some;
            }
            if (v.agreement_first_matching) {
                ++agree_first_total;
                if (*v.agreement_first_matching)
                    ++agree_first;
            }
            if (*v.oracle_hamiltonian && !v.hc_found_some()) {
                ++sum.sufficiency_failures;
                std::string id = v.graph_id;
                int dup = bundle_ids[id]++;
                if (dup)
                    id += "-" + std::to_string(dup);
                write_bundle(parse_graph6(v.g6), v, worker_cfg, out / "counterexamples" / id);
                fail_list.push_back({{"graph_id", v.graph_id},
                                     {"g6", v.g6},
                                     {"bundle", "counterexamples/" + id}});
            }
        }
        if (v.witness.checked) {
            ++witness_checked;
            if (v.witness.valid)
                ++witness_valid;
            if (v.witness.in_first_terminal)
                ++witness_in_terminal;
        }
    }

    auto frac = [](long long a, long long b) {
        return b ? nlohmann::json(static_cast<double>(a) / static_cast<double>(b))
                 : nlohmann::json(nullptr);
    };
    nlohmann::json report;
    report["corpus"] = corpus.describe();
    report["config"] = {
        {"strategy", strategy_name(cfg.hc.strategy)},
        {"matching_index", cfg.hc.matching_index},
        {"matching_cap", cfg.hc.matching_cap},
        {"budget",
         {{"branch_nodes", cfg.hc.budget.branch_nodes},
          {"cycle_cap", cfg.hc.budget.cycle_cap},
          {"subset_cap", cfg.hc.budget.subset_cap},
          {"walk_steps", cfg.hc.budget.walk_steps}}},
        {"objective",
         cfg.hc.objective == Objective::components_first ? "components-first" : "cycles-first"},
        {"oracle_on", cfg.oracle_on},
        {"oracle_cap", cfg.oracle_cap},
        {"stop_on_success", cfg.stop_on_success},
    };
    report["totals"] = {
        {"graphs", sum.graphs},
        {"skipped", sum.skipped},
        {"runs", runs_total},
        {"oracle_checked", oracle_checked},
        {"oracle_hamiltonian", oracle_true},
        {"hc_found_some", hc_some},
        {"soundness_violations", sum.soundness_violations},
    };
    report["agreement"] = {
        {"some_matching",
         {{"agree", agree_some}, {"total", agree_some_total}, {"fraction", frac(agree_some, agree_some_total)}}},
        {"first_matching",
         {{"agree", agree_first},
          {"total", agree_first_total},
          {"fraction", frac(agree_first, agree_first_total)}}},
    };
    report["sufficiency_failures"] = std::move(fail_list);
    report["anomalies"] = {
        {"monotonicity_violations", std::move(mono_list)},
        {"budget_exhausted_graphs", sum.budget_exhausted_graphs},
    };
    report["witness"] = {
        {"checked", witness_checked},
        {"valid", witness_valid},
        {"in_first_terminal", witness_in_terminal},
    };
    // wall-clock medians go to metadata.json with the other timings so the
    // report stays byte-stable for identical corpus + config + seed
    nlohmann::json rt = nlohmann::json::array();
    nlohmann::json rt_wall = nlohmann::json::array();
    for (const auto& [n, walls] : wall_by_n) {
        rt.push_back({
            {"n", n},
            {"graphs", graphs_by_n[n]},
            {"median_dc_branch_nodes", median_of(nodes_by_n[n])},
            {"budget_exhausted_rate", frac(budget_by_n[n], graphs_by_n[n])},
        });
        rt_wall.push_back({{"n", n}, {"median_wall_ms", median_of(walls)}});
    }
    report["runtime_vs_n"] = std::move(rt);
    sum.exit_code = sum.soundness_violations ? 2 : 0;
    report["exit_code"] = sum.exit_code;
    {
        std::ofstream rf(out / "report.json");
        if (!rf)
            throw error(errc::io_error, "cannot write " + (out / "report.json").string());
        rf << report.dump(2) << '\n';
    }
    sum.report = std::move(report);

    nlohmann::json meta;
    meta["generated_at"] = iso_utc_now();
    meta["total_wall_ms"] = ms_since(sweep_t0);
    meta["runtime_vs_n"] = std::move(rt_wall);
    nlohmann::json timings = nlohmann::json::array();
    for (std::size_t i : order)
        timings.push_back({{"graph_id", verdicts[i].graph_id}, {"wall_ms", verdicts[i].wall_ms}});
    meta["timings"] = std::move(timings);
    {
        std::ofstream mf(out / "metadata.json");
        mf << meta.dump(2) << '\n';
    }
    return sum;
}

void generate_corpus(int n, int count, std::uint64_t seed, const std::string& path) {
    if (count <= 0)
        throw error(errc::bad_argument, "count must be > 0");
    std::ofstream f(path);
    if (!f)
        throw error(errc::io_error, "cannot write " + path);
    Rng master(seed);
    for (int i = 0; i < count; ++i)
        f << encode_graph6(random_cubic_bridgeless(n, master.next())) << '\n';
}

} // namespace hcdc
