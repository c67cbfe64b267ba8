#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tempo/reachability.hpp"
#include "tempo/temporal_graph.hpp"

using namespace tempo;

namespace {

void check_against_oracle(const TemporalGraph& g, int s, Setting setting) {
    auto got = earliest_arrival(g, s, setting);
    auto want = oracle::earliest_arrival(g, s, setting);
    for (int v = 0; v < g.n(); ++v) {
        INFO("source ", s, " vertex ", v, " setting ", to_string(setting));
        CHECK(got.earliest[v] == want[v]);
    }
}

}  // namespace

TEST_CASE("earliest arrivals on the square") {
    auto g = fixtures::square();
    for (auto setting : {Setting::NonStrict, Setting::Strict}) {
        auto arr = earliest_arrival(g, 0, setting);
        CHECK(arr.source == 0);
        CHECK_FALSE(arr.earliest[0].has_value());
        CHECK(arr.earliest[1] == 1);
        CHECK(arr.earliest[2] == 2);
        CHECK(arr.earliest[3] == 2);
        CHECK(arr.all_reachable());
    }
}

TEST_CASE("strict and non-strict differ when labels repeat on a path") {
    // 0-1 and 1-2 share the label, so strictly there is no way through.
    TemporalGraph g(3, {{{0, 1}, {2}}, {{1, 2}, {2}}});
    auto ns = earliest_arrival(g, 0, Setting::NonStrict);
    CHECK(ns.earliest[2] == 2);
    auto st = earliest_arrival(g, 0, Setting::Strict);
    CHECK_FALSE(st.earliest[2].has_value());
}

TEST_CASE("source_arrival floors the departure") {
    auto g = fixtures::square();
    // Departing at 2 or later, vertex 0 only reaches 3 (and 2 non-strictly
    // via the 0-3-2 side? no: 3-2 has label 1 < 2, so just 3).
    auto arr = earliest_arrival(g, 0, Setting::NonStrict, 2);
    CHECK_FALSE(arr.earliest[1].has_value());
    CHECK_FALSE(arr.earliest[2].has_value());
    CHECK(arr.earliest[3] == 2);

    // Strictly the floor excludes equal labels too.
    auto st = earliest_arrival(g, 0, Setting::Strict, 2);
    CHECK_FALSE(st.earliest[3].has_value());
}

TEST_CASE("arrival map for a single vertex") {
    TemporalGraph g(1);
    auto arr = earliest_arrival(g, 0, Setting::NonStrict);
    CHECK(arr.all_reachable());
    CHECK_FALSE(arr.earliest[0].has_value());
}

TEST_CASE("earliest arrivals match the oracle on random graphs") {
    std::mt19937 rng(20260822);
    for (int round = 0; round < 150; ++round) {
        auto g = oracle::random_graph(rng, 6, 5, 3);
        for (auto setting : {Setting::NonStrict, Setting::Strict}) {
            for (int s = 0; s < g.n(); ++s) {
                check_against_oracle(g, s, setting);
            }
        }
    }
}

TEST_CASE("temporal connectivity on the fixtures") {
    CHECK(is_temporally_connected(fixtures::square(), Setting::NonStrict));
    CHECK(is_temporally_connected(fixtures::square(), Setting::Strict));
    CHECK(is_temporally_connected(fixtures::pendant_cycle(),
                                  Setting::NonStrict));
    CHECK(is_temporally_connected(fixtures::star4(), Setting::NonStrict));
    CHECK(is_temporally_connected(fixtures::star4(), Setting::Strict));

    TemporalGraph path(3, {{{0, 1}, {2}}, {{1, 2}, {1}}});
    CHECK_FALSE(is_temporally_connected(path, Setting::NonStrict));

    CHECK(is_temporally_connected(TemporalGraph(1), Setting::Strict));
    CHECK_FALSE(is_temporally_connected(TemporalGraph(2), Setting::NonStrict));
}

TEST_CASE("pivots of the pendant cycle") {
    auto g = fixtures::pendant_cycle();
    auto pivots = find_pivots(g, Setting::NonStrict);
    CHECK(std::find(pivots.begin(), pivots.end(), Pivot{3, 6}) != pivots.end());
    for (const auto& p : pivots) {
        // Every pivot must collect everyone and then reach everyone.
        auto out = earliest_arrival(g, p.vertex, Setting::NonStrict, p.time);
        CHECK(out.all_reachable());
    }
}

TEST_CASE("the square has no pivots") {
    CHECK(find_pivots(fixtures::square(), Setting::NonStrict).empty());
    CHECK(find_pivots(fixtures::square(), Setting::Strict).empty());
}

TEST_CASE("disconnected graphs have no pivots") {
    TemporalGraph g(3, {{{0, 1}, {1}}});
    CHECK(find_pivots(g, Setting::NonStrict).empty());
}

TEST_CASE("a lone vertex is its own pivot at time zero") {
    auto pivots = find_pivots(TemporalGraph(1), Setting::Strict);
    REQUIRE(pivots.size() == 1);
    CHECK(pivots[0] == Pivot{0, 0});
}

TEST_CASE("pivot definition holds on random graphs") {
    std::mt19937 rng(7);
    for (int round = 0; round < 60; ++round) {
        auto g = oracle::random_graph(rng, 5, 6, 2);
        for (auto setting : {Setting::NonStrict, Setting::Strict}) {
            auto pivots = find_pivots(g, setting);
            if (!pivots.empty()) {
                CHECK(is_temporally_connected(g, setting));
            }
            for (const auto& p : pivots) {
                Label latest = kMinusInf;
                bool all_in = true;
                for (int s = 0; s < g.n(); ++s) {
                    if (s == p.vertex) continue;
                    auto in = oracle::earliest_arrival(g, s, setting);
                    if (!in[p.vertex]) {
                        all_in = false;
                        break;
                    }
                    latest = std::max(latest, *in[p.vertex]);
                }
                CHECK(all_in);
                if (g.n() > 1) CHECK(p.time == latest);
                auto out =
                    oracle::earliest_arrival(g, p.vertex, setting, p.time);
                for (int v = 0; v < g.n(); ++v) {
                    if (v == p.vertex) continue;
                    CHECK(out[v].has_value());
                }
            }
        }
    }
}
