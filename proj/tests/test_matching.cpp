#include <doctest.h>

#include "matching.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace hcdc;
namespace tu = hcdc::testutil;

TEST_CASE("perfect_matching returns the lexicographically least one") {
    PerfectMatching m = perfect_matching(tu::k4());
    CHECK(m.pairs == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(m.partner == std::vector<int>{1, 0, 3, 2});
    CHECK(verify_matching(tu::k4(), m));

    CHECK(perfect_matching(tu::prism()).pairs == std::vector<Edge>{{0, 1}, {2, 5}, {3, 4}});
    CHECK(perfect_matching(tu::cycle_graph(6)).pairs == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
}

TEST_CASE("matching counts agree with exhaustive subset search") {
    struct Row {
        Graph g;
        std::size_t count;
    };
    const Row rows[] = {
        {tu::k4(), 3},      {tu::cycle_graph(6), 2}, {tu::prism(), 4},
        {tu::k33(), 6},     {tu::petersen(), 6},     {tu::pentagon_triangle(), 5},
    };
    for (const Row& r : rows) {
        auto mine = enumerate_perfect_matchings(r.g, 1000);
        auto ref = tu::all_matchings_bruteforce(r.g);
        CHECK(mine.size() == r.count);
        REQUIRE(mine.size() == ref.size());
        for (std::size_t i = 0; i < mine.size(); ++i)
            CHECK(mine[i].pairs == ref[i]); // same lexicographic order
    }
}

TEST_CASE("enumeration respects the cap and keeps the order prefix") {
    auto full = enumerate_perfect_matchings(tu::k33(), 100);
    REQUIRE(full.size() == 6);
    auto capped = enumerate_perfect_matchings(tu::k33(), 2);
    REQUIRE(capped.size() == 2);
    CHECK(capped[0].pairs == full[0].pairs);
    CHECK(capped[1].pairs == full[1].pairs);
    CHECK(full[0].pairs == perfect_matching(tu::k33()).pairs);
}

TEST_CASE("graphs without a perfect matching are refused") {
    CHECK_THROWS_AS(perfect_matching(tu::cycle_graph(5)), error);
    try {
        perfect_matching(tu::cycle_graph(5));
    } catch (const error& e) {
        CHECK(e.code() == errc::no_perfect_matching);
    }
    // even order but a star: the three leaves cannot all be covered
    Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(perfect_matching(star), error);
    CHECK(enumerate_perfect_matchings(star, 10).empty());
}

TEST_CASE("verify_matching rejects wrong structures") {
    Graph g = tu::k4();
    PerfectMatching m = perfect_matching(g);
    CHECK(verify_matching(g, m));

    PerfectMatching overlap = m;
    overlap.pairs = {{0, 1}, {1, 2}};
    CHECK_FALSE(verify_matching(g, overlap));

    // pairs that are not edges of the host
    PerfectMatching nonedge{{{0, 2}, {1, 3}}, {2, 3, 0, 1}};
    CHECK_FALSE(verify_matching(tu::cycle_graph(4), nonedge));
}

TEST_CASE("matching_from_pairs builds the partner table") {
    PerfectMatching m = matching_from_pairs(tu::prism(), {{0, 3}, {1, 4}, {2, 5}});
    CHECK(m.partner == std::vector<int>{3, 4, 5, 0, 1, 2});
    CHECK(verify_matching(tu::prism(), m));
    CHECK_THROWS_AS(matching_from_pairs(tu::prism(), {{0, 3}, {1, 4}}), error);
    CHECK_THROWS_AS(matching_from_pairs(tu::prism(), {{0, 1}, {0, 2}, {4, 5}}), error);
}

TEST_CASE("random graphs always admit a perfect matching") {
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        Graph g = random_cubic_bridgeless(10, rng.next());
        PerfectMatching m = perfect_matching(g);
        CHECK(verify_matching(g, m));
    }
}
