#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tsb/checkpoint.hpp"
#include "tsb/oracle.hpp"
#include "tsb/sweep.hpp"

using namespace tsb;
using testutil::make_dataset;
using testutil::random_lattice_dataset;

TEST_CASE("checkpoint grids start at the shift and step by delta") {
    CHECK(checkpoints_for_shift(15, 5, 0) == std::vector<std::size_t>{0, 5, 10});
    CHECK(checkpoints_for_shift(15, 5, 3) == std::vector<std::size_t>{3, 8, 13});
    CHECK(checkpoints_for_shift(12, 5, 4) == std::vector<std::size_t>{4, 9});
    CHECK(checkpoints_for_shift(5, 5, 2) == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(checkpoints_for_shift(10, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(checkpoints_for_shift(4, 5, 0), std::invalid_argument);
}

TEST_CASE("every delta-long window contains a checkpoint") {
    for (std::size_t k = 2; k <= 60; ++k) {
        for (std::size_t delta = 2; delta <= k; ++delta) {
            for (std::size_t s = 0; s < delta; ++s) {
                auto cps = checkpoints_for_shift(k, delta, s);
                for (std::size_t w = 0; w + delta <= k; ++w) {
                    bool hit = std::any_of(cps.begin(), cps.end(), [&](std::size_t c) {
                        return c >= w && c < w + delta;
                    });
                    CHECK(hit);
                }
            }
        }
    }
}

TEST_CASE("checkpoint count is the ceiling of (k - shift) / delta") {
    for (std::size_t k = 2; k <= 40; ++k) {
        for (std::size_t delta = 1; delta <= k; ++delta) {
            for (std::size_t s = 0; s < delta; ++s) {
                auto cps = checkpoints_for_shift(k, delta, s);
                CHECK(cps.size() == (k - s + delta - 1) / delta);
            }
        }
    }
}

TEST_CASE("covering guard repairs sparse ends and rejects interior gaps") {
    CHECK(ensure_covering({1, 4, 7}, 10, 3) == std::vector<std::size_t>{1, 4, 7});
    CHECK(ensure_covering({7}, 10, 3) == std::vector<std::size_t>{1, 4, 7});
    CHECK(ensure_covering({0}, 10, 3) == std::vector<std::size_t>{0, 3, 6, 9});
    CHECK_THROWS_AS(ensure_covering({0, 8}, 10, 3), std::invalid_argument);
    CHECK_THROWS_AS(ensure_covering({3, 1}, 10, 3), std::invalid_argument);
    CHECK_THROWS_AS(ensure_covering({12}, 10, 3), std::invalid_argument);
    // Generated grids pass through untouched.
    for (std::size_t s = 0; s < 4; ++s) {
        auto cps = checkpoints_for_shift(19, 4, s);
        CHECK(ensure_covering(cps, 19, 4) == cps);
    }
}

TEST_CASE("placement cost sums the densest bin per checkpoint over n") {
    auto ds = make_dataset({{0.0}, {0.4}, {0.9}, {2.0}});
    auto idx = BinIndex::create(ds, 1.0);
    CHECK(placement_cost(idx, {0}, ds.n()) == 0.75);  // densest bin holds 3 of 4

    auto ds2 = make_dataset({{0.0, 0.0}, {0.1, 5.0}, {0.2, 10.0}});
    auto idx2 = BinIndex::create(ds2, 1.0);
    CHECK(placement_cost(idx2, {0, 1}, ds2.n()) == 3.0 / 3.0 + 1.0 / 3.0);
    CHECK_THROWS_AS(placement_cost(idx2, {}, ds2.n()), std::invalid_argument);
}

TEST_CASE("placement optimisation picks the shift with the sparsest bins") {
    // Crowded at even timestamps, spread out at odd ones.
    auto ds = make_dataset({{0.0, 0.0, 0.0, 0.0},
                            {0.1, 10.0, 0.1, 10.0},
                            {0.2, 20.0, 0.2, 20.0}});
    auto idx = BinIndex::create(ds, 1.0);
    auto plan = optimize_placement(idx, ds.k(), 2, ds.n());
    CHECK(plan.shift == 1);
    CHECK(plan.checkpoints == std::vector<std::size_t>{1, 3});
    CHECK(plan.cost == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("placement ties resolve to the smallest shift") {
    auto ds = make_dataset({{0.0, 0.0, 0.0, 0.0}, {0.5, 0.5, 0.5, 0.5}});
    auto idx = BinIndex::create(ds, 1.0);
    auto plan = optimize_placement(idx, ds.k(), 2, ds.n());
    CHECK(plan.shift == 0);
}

TEST_CASE("delta of one checkpoints every timestamp") {
    auto ds = make_dataset({{0.0, 1.0, 2.0}});
    auto idx = BinIndex::create(ds, 1.0);
    auto plan = optimize_placement(idx, ds.k(), 1, ds.n());
    CHECK(plan.checkpoints == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("optimiser cost matches an independent re-enumeration of all shifts") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 50; ++rep) {
        auto ds = random_lattice_dataset(rng, 5, 18);
        double eps = testutil::random_lattice_epsilon(rng);
        std::uniform_int_distribution<std::size_t> dd(2, 6);
        std::size_t delta = dd(rng);
        auto idx = BinIndex::create(ds, eps);
        auto plan = optimize_placement(idx, ds.k(), delta, ds.n());
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_shift = 0;
        for (std::size_t s = 0; s < delta; ++s) {
            double c = placement_cost(idx, checkpoints_for_shift(ds.k(), delta, s), ds.n());
            if (c < best) {
                best = c;
                best_shift = s;
            }
        }
        CHECK(plan.cost == best);
        CHECK(plan.shift == best_shift);
    }
}

TEST_CASE("two-way pair verification finds the full run around a checkpoint") {
    auto ds = make_dataset({{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
                            {9.0, 0.5, 0.5, 0.5, 0.5, 0.5, 9.0}});
    Params p{1.0, 3, 0};
    for (std::size_t t = 1; t <= 5; ++t) {
        auto m = verify_pair_two_way(ds, 0, 1, t, p);
        REQUIRE(m.has_value());
        CHECK(*m == PairMatch{0, 1, {1, 6}});
    }
    CHECK_THROWS_AS(verify_pair_two_way(ds, 0, 1, 0, p), std::invalid_argument);
}

TEST_CASE("two-way pair verification abandons runs of exactly delta minus one") {
    auto ds = make_dataset({{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
                            {9.0, 9.0, 0.5, 0.5, 9.0, 9.0, 9.0}});
    Params p{1.0, 3, 0};
    CHECK_FALSE(verify_pair_two_way(ds, 0, 1, 2, p).has_value());
    CHECK_FALSE(verify_pair_two_way(ds, 0, 1, 3, p).has_value());
}

TEST_CASE("two-way pair verification rejects a probe that would pass the series end") {
    auto ds = make_dataset({{0.0, 0.0, 0.0, 0.0}, {9.0, 9.0, 0.5, 0.5}});
    CHECK_FALSE(verify_pair_two_way(ds, 0, 1, 3, {1.0, 3, 0}).has_value());
}

TEST_CASE("identical series verified anywhere give the whole timeline") {
    auto ds = make_dataset({{1.0, 2.0, 3.0, 4.0, 5.0}, {1.0, 2.0, 3.0, 4.0, 5.0}});
    auto m = verify_pair_two_way(ds, 0, 1, 2, {0.5, 4, 0});
    REQUIRE(m.has_value());
    CHECK(m->interval == Interval{0, 5});
}

TEST_CASE("a run crossing several checkpoints is reported once") {
    auto ds = make_dataset({std::vector<double>(20, 1.0), std::vector<double>(20, 1.5)});
    auto out = discover_pairs_checkpoint(ds, {1.0, 5, 0});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == PairMatch{0, 1, {0, 20}});
}

TEST_CASE("checkpoint pair discovery equals sweep and reference on random data") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 300; ++rep) {
        auto ds = random_lattice_dataset(rng, 6, 16);
        Params p = testutil::random_pair_params(rng, ds.k());
        auto cp = discover_pairs_checkpoint(ds, p);
        CHECK(cp == discover_pairs_sweepline(ds, p));
        CHECK(cp == oracle_pairs(ds, p));
    }
}

TEST_CASE("two-way bundle verification expands a stable seed to its full span") {
    auto ds = make_dataset({{0.0, 0.0, 0.0, 0.0, 0.0},
                            {0.5, 0.5, 0.5, 0.5, 0.5},
                            {1.0, 1.0, 1.0, 1.0, 1.0},
                            {9.0, 9.0, 9.0, 9.0, 9.0}});
    auto out = verify_bundle_two_way(ds, {0, 1, 2}, 2, {1.0, 2, 3});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == BundleMatch{{0, 1, 2}, {0, 5}});
}

TEST_CASE("checkpoint verification recovers a subgroup when its backward superset breaks during the probe") {
    // At the checkpoint (t=5) all four series sit within epsilon. Walking
    // backward, the quartet survives to t=3. Its probe lands at t=7, where
    // S3 has already left: a verifier that only filters the recorded group
    // would drop everything, yet {S0,S1,S2} still covers [3,8) on its own.
    auto ds = make_dataset({
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 9.0, 0.0, 0.0, 0.0},
        {3.0, 3.0, 3.0, 0.4, 0.4, 0.4, 0.4, 0.4, 12.0, 3.0, 3.0, 3.0},
        {6.0, 6.0, 6.0, 0.8, 0.8, 0.8, 0.8, 0.8, 15.0, 6.0, 6.0, 6.0},
        {9.0, 9.0, -9.0, 0.6, 0.6, 0.6, 20.0, 20.0, 18.0, 9.0, 9.0, 9.0},
    });
    Params p{1.0, 5, 3};
    auto out = verify_bundle_two_way(ds, {0, 1, 2, 3}, 5, p);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == BundleMatch{{0, 1, 2}, {3, 8}});

    // The full pipeline agrees with the reference on the same data.
    auto expect = oracle_bundles(ds, p);
    REQUIRE(expect.size() == 1);
    CHECK(discover_bundles_checkpoint(ds, p) == expect);
    CHECK(discover_bundles_sweepline(ds, p) == expect);
}

TEST_CASE("two-way bundle verification drops candidates that cannot reach delta") {
    auto ds = make_dataset({{0.0, 0.0, 0.0, 9.0},
                            {0.5, 0.5, 0.5, 0.5},
                            {1.0, 1.0, 1.0, 1.0}});
    CHECK(verify_bundle_two_way(ds, {0, 1, 2}, 1, {1.0, 4, 3}).empty());
}

TEST_CASE("checkpoint bundle discovery equals sweep and reference on random data") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 150; ++rep) {
        auto ds = random_lattice_dataset(rng, 6, 12, 4);
        Params p = testutil::random_bundle_params(rng, ds.n(), ds.k());
        auto cp = discover_bundles_checkpoint(ds, p);
        CHECK(cp == discover_bundles_sweepline(ds, p));
        CHECK(cp == oracle_bundles(ds, p));
    }
}

TEST_CASE("checkpoint bundle discovery with mu above n is empty") {
    auto ds = make_dataset({{0.0, 0.0}, {0.1, 0.1}});
    CHECK(discover_bundles_checkpoint(ds, {1.0, 2, 3}).empty());
}
