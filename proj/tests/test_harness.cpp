#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graph6.hpp"
#include "harness.hpp"
#include "testutil.hpp"

using namespace hcdc;
namespace tu = hcdc::testutil;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("hcdc_harness_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

long long line_count(const fs::path& p) {
    std::ifstream f(p);
    std::string line;
    long long k = 0;
    while (std::getline(f, line))
        ++k;
    return k;
}

} // namespace

TEST_CASE("a solvable instance produces a fully agreeing verdict") {
    Verdict v = verify_instance(tu::k4(), HarnessConfig{});
    CHECK(v.n == 4);
    CHECK(v.graph_id == graph_id(tu::k4()));
    CHECK(v.g6 == "C~");
    CHECK_FALSE(v.skipped);
    REQUIRE(v.runs.size() == 1);
    CHECK(v.runs[0].matching_index == 0);
    CHECK(v.runs[0].hc_found);
    CHECK(v.runs[0].reason == Termination::hamilton);
    CHECK(v.runs[0].rounds == 0);
    REQUIRE(v.oracle_hamiltonian.has_value());
    CHECK(*v.oracle_hamiltonian);
    CHECK(v.oracle_certificate.has_value());
    REQUIRE(v.agreement_some_matching.has_value());
    CHECK(*v.agreement_some_matching);
    REQUIRE(v.agreement_first_matching.has_value());
    CHECK(*v.agreement_first_matching);
    CHECK_FALSE(v.witness.checked); // first factor is already spanning
    CHECK(v.soundness_ok);
    CHECK(v.hc_found_some());
    REQUIRE(v.hc_found_first().has_value());
    CHECK(*v.hc_found_first());
}

TEST_CASE("strategy all walks every matching of a non-Hamiltonian graph") {
    HarnessConfig cfg;
    cfg.hc.strategy = MatchingStrategy::all;
    Verdict v = verify_instance(tu::petersen(), cfg);
    CHECK(v.matchings_considered == 6);
    CHECK_FALSE(v.matchings_capped);
    REQUIRE(v.runs.size() == 6);
    for (const MatchingRun& r : v.runs)
        CHECK_FALSE(r.hc_found);
    CHECK_FALSE(v.hc_found_some());
    REQUIRE(v.oracle_hamiltonian.has_value());
    CHECK_FALSE(*v.oracle_hamiltonian);
    // both readings agree: never found, and indeed not Hamiltonian
    CHECK(*v.agreement_some_matching);
    CHECK(*v.agreement_first_matching);
    CHECK(v.soundness_ok);
}

TEST_CASE("early stop keeps only the matchings up to the first success") {
    HarnessConfig cfg;
    cfg.hc.strategy = MatchingStrategy::all;
    Verdict v = verify_instance(tu::prism(), cfg);
    REQUIRE(v.runs.size() >= 1);
    CHECK(v.runs.front().matching_index == 0);
    CHECK(v.runs.front().hc_found); // the prism's first factor is spanning
    CHECK(v.runs.size() == 1);      // stop_on_success
    CHECK(v.matchings_considered == 4);

    cfg.stop_on_success = false;
    Verdict all = verify_instance(tu::prism(), cfg);
    CHECK(all.runs.size() == 4);
    for (const MatchingRun& r : all.runs)
        CHECK(r.hc_found);
}

TEST_CASE("a single indexed matching can be studied in isolation") {
    HarnessConfig cfg;
    cfg.hc.strategy = MatchingStrategy::index;
    cfg.hc.matching_index = 3; // the prism's rung matching
    Verdict v = verify_instance(tu::prism(), cfg);
    REQUIRE(v.runs.size() == 1);
    CHECK(v.runs[0].matching_index == 3);
    CHECK(v.runs[0].hc_found);
    CHECK(v.runs[0].rounds == 1);
    CHECK(v.matchings_considered == 1);
    // matching 0 never ran, so the first-matching reading is absent
    CHECK_FALSE(v.agreement_first_matching.has_value());
    CHECK(v.agreement_some_matching.has_value());

    cfg.hc.matching_index = 9;
    Verdict miss = verify_instance(tu::prism(), cfg);
    CHECK(miss.skipped);
    CHECK(miss.runs.empty());
    CHECK(miss.skip_reason.find("out of range") != std::string::npos);
}

TEST_CASE("graphs outside the input class are skipped with a reason") {
    Verdict b = verify_instance(tu::bridged_cubic(), HarnessConfig{});
    CHECK(b.skipped);
    CHECK(b.runs.empty());
    CHECK(b.skip_reason == "NotBridgeless");
    CHECK(b.soundness_ok);

    Verdict nc = verify_instance(tu::cycle_graph(8), HarnessConfig{});
    CHECK(nc.skipped);
    CHECK(nc.skip_reason == "NotCubic");
}

TEST_CASE("the witness probe validates the symmetric-difference cycles") {
    // relabeled pentagon+triangle: the first matching leaves two factor
    // cycles, and the graph is Hamiltonian, so the probe has work to do
    Graph g = tu::pentagon_triangle_shuffled();
    TwoFactor f0 = complement_two_factor(g, perfect_matching(g));
    REQUIRE(f0.cycle_count() == 2);
    REQUIRE(is_hamiltonian_bruteforce(g).hamiltonian);

    Verdict v = verify_instance(g, HarnessConfig{});
    CHECK(v.witness.checked);
    CHECK(v.witness.valid);
    CHECK(v.witness.cycles >= 1);

    HarnessConfig off;
    off.witness_check = false;
    Verdict v2 = verify_instance(g, off);
    CHECK_FALSE(v2.witness.checked);
}

TEST_CASE("oracle settings control the agreement fields") {
    HarnessConfig no_oracle;
    no_oracle.oracle_on = false;
    Verdict v = verify_instance(tu::k4(), no_oracle);
    CHECK_FALSE(v.oracle_hamiltonian.has_value());
    CHECK_FALSE(v.agreement_some_matching.has_value());
    CHECK_FALSE(v.agreement_first_matching.has_value());
    CHECK_FALSE(v.witness.checked); // witness needs the certificate

    HarnessConfig low_cap;
    low_cap.oracle_cap = 8;
    Verdict p = verify_instance(tu::petersen(), low_cap);
    CHECK_FALSE(p.oracle_hamiltonian.has_value()); // n = 10 over the cap
    CHECK(p.soundness_ok);
}

TEST_CASE("verdict records use stable names and keep times opt-in") {
    Verdict v = verify_instance(tu::k4(), HarnessConfig{});
    nlohmann::json bare = verdict_json(v, false);
    for (const char* key :
         {"graph_id", "n", "source", "g6", "skipped", "runs", "matchings_considered",
          "matchings_capped", "oracle_hamiltonian", "agreement_some_matching",
          "agreement_first_matching", "witness", "soundness_ok"})
        CHECK_MESSAGE(bare.contains(key), key);
    CHECK_FALSE(bare.contains("wall_times"));
    const auto& run = bare.at("runs").at(0);
    for (const char* key : {"matching_index", "hc_found", "termination_reason", "rounds",
                            "anomalies", "dc_branch_nodes", "budget_exhausted"})
        CHECK_MESSAGE(run.contains(key), key);
    CHECK(run.at("termination_reason") == "hamilton");

    nlohmann::json timed = verdict_json(v, true);
    CHECK(timed.contains("wall_times"));
    CHECK(timed.at("wall_times").contains("total_ms"));
    CHECK(timed.at("wall_times").contains("per_matching_ms"));
}

TEST_CASE("an enumerated sweep writes the full output tree") {
    TempDir dir("sweep_enum");
    CorpusSpec corpus;
    corpus.kind = CorpusSpec::Kind::enumerate_range;
    corpus.n_min = 4;
    corpus.n_max = 6;
    SweepSummary s = sweep(corpus, HarnessConfig{}, dir.str());
    CHECK(s.graphs == 71);
    CHECK(s.skipped == 0);
    CHECK(s.soundness_violations == 0);
    CHECK(s.exit_code == 0);

    fs::path verdicts = dir.path / "verdicts.jsonl";
    REQUIRE(fs::exists(verdicts));
    CHECK(line_count(verdicts) == 71);

    // sorted by graph_id, no timing fields
    std::ifstream in(verdicts);
    std::string line, prev_id;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        std::string id = j.at("graph_id").get<std::string>();
        CHECK(prev_id <= id);
        prev_id = id;
        CHECK_FALSE(j.contains("wall_times"));
        CHECK(j.at("source") == "enumerated");
    }

    fs::path report = dir.path / "report.json";
    REQUIRE(fs::exists(report));
    auto rep = nlohmann::json::parse(slurp(report));
    CHECK(rep.at("totals").at("graphs") == 71);
    CHECK(rep.at("totals").at("skipped") == 0);
    CHECK(rep.at("totals").at("oracle_checked") == 71);
    CHECK(rep.at("agreement").at("some_matching").at("total") == 71);
    CHECK(rep.at("exit_code") == 0);
    CHECK(rep.at("corpus") == corpus.describe());
    CHECK(rep.contains("runtime_vs_n"));
    CHECK(rep.at("sufficiency_failures").is_array());

    fs::path meta = dir.path / "metadata.json";
    REQUIRE(fs::exists(meta));
    auto m = nlohmann::json::parse(slurp(meta));
    CHECK(m.contains("generated_at"));
    CHECK(m.at("timings").size() == 71);
}

TEST_CASE("sweep output is byte-identical across repeat runs") {
    CorpusSpec corpus;
    corpus.kind = CorpusSpec::Kind::random_graphs;
    corpus.n = 10;
    corpus.count = 12;
    corpus.seed = 555;

    TempDir d1("repeat_a"), d2("repeat_b");
    sweep(corpus, HarnessConfig{}, d1.str());
    sweep(corpus, HarnessConfig{}, d2.str());
    CHECK(slurp(d1.path / "verdicts.jsonl") == slurp(d2.path / "verdicts.jsonl"));
    CHECK(slurp(d1.path / "report.json") == slurp(d2.path / "report.json"));
    CHECK(line_count(d1.path / "verdicts.jsonl") == 12);
}

TEST_CASE("worker threads do not change sweep output") {
    CorpusSpec corpus;
    corpus.kind = CorpusSpec::Kind::random_graphs;
    corpus.n = 10;
    corpus.count = 10;
    corpus.seed = 77;

    TempDir serial("jobs1"), parallel("jobs4");
    sweep(corpus, HarnessConfig{}, serial.str(), 1);
    sweep(corpus, HarnessConfig{}, parallel.str(), 4);
    CHECK(slurp(serial.path / "verdicts.jsonl") == slurp(parallel.path / "verdicts.jsonl"));
    CHECK(slurp(serial.path / "report.json") == slurp(parallel.path / "report.json"));
}

TEST_CASE("file corpora run through the same pipeline") {
    TempDir dir("file_corpus");
    fs::path g6 = dir.path / "graphs.g6";
    {
        std::ofstream out(g6);
        out << encode_graph6(tu::petersen()) << "\n";
        out << encode_graph6(tu::prism()) << "\n";
        out << encode_graph6(tu::bridged_cubic()) << "\n";
    }
    CorpusSpec corpus;
    corpus.kind = CorpusSpec::Kind::file;
    corpus.path = g6.string();
    TempDir out("file_out");
    SweepSummary s = sweep(corpus, HarnessConfig{}, out.str());
    CHECK(s.graphs == 3);
    CHECK(s.skipped == 1); // the bridged instance
    CHECK(s.exit_code == 0);

    CorpusSpec missing;
    missing.kind = CorpusSpec::Kind::file;
    missing.path = (dir.path / "nope.g6").string();
    TempDir out2("file_out2");
    CHECK_THROWS_AS(sweep(missing, HarnessConfig{}, out2.str()), error);
}

TEST_CASE("corpus generation is deterministic and parseable") {
    TempDir dir("gen");
    fs::path a = dir.path / "a.g6";
    fs::path b = dir.path / "b.g6";
    generate_corpus(10, 25, 99, a.string());
    generate_corpus(10, 25, 99, b.string());
    CHECK(slurp(a) == slurp(b));
    CHECK(line_count(a) == 25);

    std::ifstream in(a);
    std::string line;
    while (std::getline(in, line)) {
        Graph g = parse_graph6(line);
        CHECK(g.n() == 10);
        CHECK(is_cubic(g));
        CHECK(bridges(g).empty());
    }

    fs::path c = dir.path / "c.g6";
    generate_corpus(10, 25, 100, c.string());
    CHECK(slurp(a) != slurp(c));
}
