#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tempo/errors.hpp"
#include "tempo/exact.hpp"
#include "tempo/reachability.hpp"
#include "tempo/temporal_graph.hpp"

using namespace tempo;

namespace {

// One label per edge, kept from the full label set at random.
TemporalGraph thin_to_simple(const TemporalGraph& g, std::mt19937& rng) {
    TemporalGraph::EdgeList edges;
    for (const auto& [e, labels] : g.edges()) {
        std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
        edges.emplace_back(e, std::vector<Label>{labels[pick(rng)]});
    }
    return TemporalGraph(g.n(), std::move(edges));
}

void check_tree_witness(const TemporalGraph& g, const SpanningTreeResult& r,
                        Setting setting) {
    REQUIRE(r.exists());
    REQUIRE(r.tree.has_value());
    CHECK(r.tree->n() == g.n());
    CHECK(r.tree->edge_count() == g.n() - 1);
    CHECK(is_temporally_connected(*r.tree, setting));
    for (const auto& [e, labels] : r.tree->edges()) {
        auto full = g.labels(e);
        CHECK(std::vector<Label>(full.begin(), full.end()) == labels);
    }
}

}  // namespace

TEST_CASE("the square has no temporal spanning tree") {
    auto g = fixtures::square();
    CHECK(tst_bruteforce(g, Setting::NonStrict).verdict ==
          SpanningTreeResult::Verdict::NotExists);
    CHECK(tst_bruteforce(g, Setting::Strict).verdict ==
          SpanningTreeResult::Verdict::NotExists);
}

TEST_CASE("the star keeps a spanning tree in both settings") {
    auto g = fixtures::star4();
    for (auto setting : {Setting::NonStrict, Setting::Strict}) {
        auto r = tst_bruteforce(g, setting);
        check_tree_witness(g, r, setting);
    }
}

TEST_CASE("the pendant cycle connects but no tree of it does") {
    auto g = fixtures::pendant_cycle();
    REQUIRE(is_temporally_connected(g, Setting::NonStrict));
    CHECK_FALSE(tst_bruteforce(g, Setting::NonStrict).exists());
}

TEST_CASE("trivial and disconnected spanning tree inputs") {
    CHECK(tst_bruteforce(TemporalGraph(1), Setting::Strict).exists());
    CHECK(tst_bruteforce(TemporalGraph(0), Setting::NonStrict).exists());
    TemporalGraph split(4, {{{0, 1}, {1}}, {{2, 3}, {1}}});
    CHECK(tst_bruteforce(split, Setting::NonStrict).verdict ==
          SpanningTreeResult::Verdict::NotExists);
}

TEST_CASE("tst_bruteforce refuses oversized inputs") {
    TemporalGraph::EdgeList edges;
    for (int v = 0; v + 1 < 11; ++v) edges.push_back({{v, v + 1}, {v + 1}});
    TemporalGraph chain(11, edges);
    CHECK_THROWS_AS(tst_bruteforce(chain, Setting::NonStrict), SizeGuardError);
    CHECK_NOTHROW(tst_bruteforce(chain, Setting::NonStrict, 11));
}

TEST_CASE("tst_simple handles the one-label cases directly") {
    CHECK_THROWS_AS(tst_simple(fixtures::star4(), Setting::NonStrict),
                    std::invalid_argument);

    CHECK(tst_simple(fixtures::happy_k4(), Setting::Strict).verdict ==
          SpanningTreeResult::Verdict::NeverForSimpleStrict);
    // Non-strictly a tree needs all its edges at one time; every snapshot of
    // this clique is a perfect matching, so nothing spans.
    CHECK(tst_simple(fixtures::happy_k4(), Setting::NonStrict).verdict ==
          SpanningTreeResult::Verdict::NotExists);

    TemporalGraph pair(2, {{{0, 1}, {5}}});
    CHECK(tst_simple(pair, Setting::Strict).exists());
    CHECK(tst_simple(TemporalGraph(2), Setting::Strict).verdict ==
          SpanningTreeResult::Verdict::NotExists);
    CHECK(tst_simple(TemporalGraph(1), Setting::Strict).exists());

    TemporalGraph snap(3, {{{0, 1}, {2}}, {{1, 2}, {2}}});
    auto r = tst_simple(snap, Setting::NonStrict);
    check_tree_witness(snap, r, Setting::NonStrict);
}

TEST_CASE("tst_simple agrees with the brute force on random simple graphs") {
    std::mt19937 rng(2718);
    for (int round = 0; round < 150; ++round) {
        auto g = thin_to_simple(oracle::random_graph(rng, 6, 5, 3), rng);
        for (auto setting : {Setting::NonStrict, Setting::Strict}) {
            auto fast = tst_simple(g, setting);
            auto slow = tst_bruteforce(g, setting);
            INFO("round ", round, " setting ", to_string(setting));
            CHECK(fast.exists() == slow.exists());
            if (setting == Setting::Strict && g.n() > 2) {
                CHECK(fast.verdict ==
                      SpanningTreeResult::Verdict::NeverForSimpleStrict);
                CHECK_FALSE(slow.exists());
            }
            if (fast.exists()) check_tree_witness(g, fast, setting);
        }
    }
}

TEST_CASE("a temporal spanning tree forces bidirectional connectivity") {
    std::mt19937 rng(31);
    for (int round = 0; round < 60; ++round) {
        auto g = oracle::random_graph(rng, 6, 5, 2);
        for (auto setting : {Setting::NonStrict, Setting::Strict}) {
            if (tst_bruteforce(g, setting).exists())
                CHECK(is_bidirectionally_connected(g, setting));
        }
    }
}

TEST_CASE("minimum bi-spanners of the fixtures") {
    auto pendant = min_bispanner_bruteforce(fixtures::pendant_cycle(),
                                            Setting::NonStrict);
    REQUIRE(pendant.has_value());
    CHECK(pendant->size == 6);
    CHECK(pendant->subgraph == fixtures::pendant_cycle());

    auto star = min_bispanner_bruteforce(fixtures::star4(), Setting::Strict);
    REQUIRE(star.has_value());
    CHECK(star->size == 3);

    auto k4 = min_bispanner_bruteforce(fixtures::happy_k4(), Setting::NonStrict);
    REQUIRE(k4.has_value());
    CHECK(k4->size == 6);

    CHECK_FALSE(min_bispanner_bruteforce(fixtures::square(), Setting::NonStrict)
                    .has_value());
}

TEST_CASE("minimum bi-spanners never beat the constructive upper bound") {
    std::mt19937 rng(555);
    int seen = 0;
    while (seen < 25) {
        auto g = oracle::random_graph(rng, 5, 5, 2);
        if (!is_bidirectionally_connected(g, Setting::NonStrict)) continue;
        ++seen;
        auto best = min_bispanner_bruteforce(g, Setting::NonStrict);
        auto built = build_bispanner(g, Setting::NonStrict);
        REQUIRE(best.has_value());
        REQUIRE(built.has_value());
        CHECK(best->size <= built->edge_count());
        CHECK(best->size >= g.n() - 1);
        CHECK(best->size == best->subgraph.edge_count());
        CHECK(is_bidirectionally_connected(best->subgraph, Setting::NonStrict));
    }
}

TEST_CASE("min_bispanner_bruteforce refuses oversized inputs") {
    TemporalGraph::EdgeList edges;
    for (int v = 0; v < 21; ++v) edges.push_back({{v, (v + 1) % 22}, {1, 100}});
    TemporalGraph big(22, edges);
    CHECK_THROWS_AS(min_bispanner_bruteforce(big, Setting::NonStrict),
                    SizeGuardError);
}

TEST_CASE("critical edges of the fixtures") {
    auto pendant = critical_bispanner_edges(fixtures::pendant_cycle(),
                                            Setting::NonStrict);
    CHECK(pendant.size() == 6);  // every edge carries some round trip alone

    auto star = critical_bispanner_edges(fixtures::star4(), Setting::NonStrict);
    CHECK(star.size() == 3);

    CHECK_THROWS_AS(
        critical_bispanner_edges(fixtures::square(), Setting::NonStrict),
        std::invalid_argument);
}

TEST_CASE("critical edges always end up in the minimum bi-spanner") {
    std::mt19937 rng(808);
    int seen = 0;
    while (seen < 25) {
        auto g = oracle::random_graph(rng, 5, 5, 2);
        if (!is_bidirectionally_connected(g, Setting::NonStrict)) continue;
        ++seen;
        auto critical = critical_bispanner_edges(g, Setting::NonStrict);
        auto best = min_bispanner_bruteforce(g, Setting::NonStrict);
        REQUIRE(best.has_value());
        for (const Edge& e : critical) CHECK(best->subgraph.has_edge(e.u, e.v));
    }
}
