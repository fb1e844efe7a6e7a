#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tsb/oracle.hpp"
#include "tsb/sweep.hpp"

using namespace tsb;
using testutil::make_dataset;
using testutil::random_lattice_dataset;

namespace {

const std::vector<std::vector<double>> kBlip{
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.5, 0.5, 0.5, 5.0, 0.5, 0.5},
};

}  // namespace

TEST_CASE("forward verification returns the run starting at t") {
    auto ds = make_dataset(kBlip);
    CHECK(verify_pair_forward(ds, 0, 1, 0, 1.0) == Interval{0, 3});
    CHECK(verify_pair_forward(ds, 0, 1, 1, 1.0) == Interval{1, 3});
    CHECK(verify_pair_forward(ds, 0, 1, 4, 1.0) == Interval{4, 6});
    CHECK_THROWS_AS(verify_pair_forward(ds, 0, 1, 3, 1.0), std::invalid_argument);
}

TEST_CASE("sweep pair discovery keeps only runs reaching delta") {
    auto ds = make_dataset(kBlip);
    auto matches = discover_pairs_sweepline(ds, {1.0, 3, 0});
    REQUIRE(matches.size() == 1);
    CHECK(matches[0] == PairMatch{0, 1, {0, 3}});

    matches = discover_pairs_sweepline(ds, {1.0, 2, 0});
    REQUIRE(matches.size() == 2);
    CHECK(matches[0] == PairMatch{0, 1, {0, 3}});
    CHECK(matches[1] == PairMatch{0, 1, {4, 6}});
}

TEST_CASE("sweep pair discovery equals the reference on random lattice data") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 300; ++rep) {
        auto ds = random_lattice_dataset(rng, 6, 16);
        Params p = testutil::random_pair_params(rng, ds.k());
        CHECK(discover_pairs_sweepline(ds, p) == oracle_pairs(ds, p));
    }
}

TEST_CASE("sweep pair discovery is deterministic") {
    std::mt19937_64 rng(32);
    auto ds = random_lattice_dataset(rng, 8, 24);
    Params p{0.5, 3, 0};
    CHECK(discover_pairs_sweepline(ds, p) == discover_pairs_sweepline(ds, p));
}

TEST_CASE("forward bundle verification tracks a stable group to the end") {
    auto ds = make_dataset({{0.0, 0.0, 0.0, 0.0, 0.0},
                            {0.5, 0.5, 0.5, 0.5, 0.5},
                            {1.0, 1.0, 1.0, 1.0, 1.0},
                            {9.0, 9.0, 9.0, 9.0, 9.0}});
    auto out = verify_bundle_forward(ds, {0, 1, 2}, 0, {1.0, 2, 3});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == BundleMatch{{0, 1, 2}, {0, 5}});
}

TEST_CASE("forward bundle verification reports each shed stage that stays above mu") {
    auto ds = make_dataset({{0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00},
                            {0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25},
                            {0.50, 0.50, 0.50, 0.50, 9.00, 9.00, 9.00, 9.00},
                            {0.75, 0.75, 9.00, 9.00, 9.00, 9.00, 9.00, 9.00}});
    auto out = verify_bundle_forward(ds, {0, 1, 2, 3}, 0, {1.0, 2, 3});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == BundleMatch{{0, 1, 2}, {0, 4}});
    CHECK(out[1] == BundleMatch{{0, 1, 2, 3}, {0, 2}});
}

TEST_CASE("forward bundle verification validates its inputs") {
    auto ds = make_dataset({{0.0, 0.0}, {0.5, 0.5}, {9.0, 9.0}});
    CHECK_THROWS_AS(verify_bundle_forward(ds, {0, 1}, 0, {1.0, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(verify_bundle_forward(ds, {0, 1, 2}, 0, {1.0, 2, 3}), std::invalid_argument);
}

TEST_CASE("sweep bundle discovery finds the single constant-spread group") {
    auto ds = make_dataset({{0.0, 0.0, 0.0, 0.0},
                            {0.5, 0.5, 0.5, 0.5},
                            {1.0, 1.0, 1.0, 1.0},
                            {9.0, 9.0, 9.0, 9.0}});
    auto out = discover_bundles_sweepline(ds, {1.0, 2, 3});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == BundleMatch{{0, 1, 2}, {0, 4}});
}

TEST_CASE("sweep bundle discovery reports a temporary visitor group with mu met") {
    std::vector<double> s2(10, 10.0), s3(10, -10.0);
    for (std::size_t t = 2; t < 7; ++t) {
        s2[t] = 0.6;
        s3[t] = 0.2;
    }
    auto ds = make_dataset({std::vector<double>(10, 0.0), std::vector<double>(10, 0.5), s2, s3});
    auto out = discover_bundles_sweepline(ds, {1.0, 2, 3});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == BundleMatch{{0, 1, 2, 3}, {2, 7}});
}

TEST_CASE("mu larger than the series count yields an empty result") {
    auto ds = make_dataset({{0.0, 0.0}, {0.1, 0.1}, {0.2, 0.2}});
    CHECK(discover_bundles_sweepline(ds, {1.0, 2, 5}).empty());
}

TEST_CASE("sweep bundle discovery equals the reference on random lattice data") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 120; ++rep) {
        auto ds = random_lattice_dataset(rng, 6, 12, 4);
        Params p = testutil::random_bundle_params(rng, ds.n(), ds.k());
        CHECK(discover_bundles_sweepline(ds, p) == oracle_bundles(ds, p));
    }
}

TEST_CASE("every sweep bundle passes the declarative validator") {
    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 40; ++rep) {
        auto ds = random_lattice_dataset(rng, 7, 14, 4);
        Params p = testutil::random_bundle_params(rng, ds.n(), ds.k());
        for (const auto& b : discover_bundles_sweepline(ds, p)) {
            std::string why;
            bool ok = is_valid_bundle(ds, p, b, &why);
            CHECK_MESSAGE(ok, why);
        }
    }
}
