#pragma once

#include <optional>
#include <vector>

#include "tsb/bin_index.hpp"
#include "tsb/core.hpp"

namespace tsb {

// A set of timestamps at which candidate filtering runs. Consecutive
// checkpoints are delta apart, the first lies within the leading delta
// window and the last within the trailing one, so every run of length >=
// delta contains at least one checkpoint.
struct CheckpointPlan {
    std::vector<std::size_t> checkpoints;
    std::size_t shift = 0;
    double cost = 0.0;
};

// {shift + i * delta : < k}. Requires 1 <= delta <= k and shift < delta.
std::vector<std::size_t> checkpoints_for_shift(std::size_t k, std::size_t delta,
                                               std::size_t shift);

// Guard for externally supplied checkpoint lists: prepends/appends
// checkpoints while the head or tail gap exceeds delta - 1. Interior gaps
// larger than delta cannot be repaired this way and raise an error. Lists
// produced by checkpoints_for_shift pass through unchanged.
std::vector<std::size_t> ensure_covering(std::vector<std::size_t> checkpoints, std::size_t k,
                                         std::size_t delta);

// Density cost of a placement: sum over checkpoints of the largest bin
// cardinality at that timestamp, each normalised by n. Lower is cheaper to
// verify, because fewer series share a bin at filtering time.
double placement_cost(const BinIndex& idx, const std::vector<std::size_t>& checkpoints,
                      std::size_t n);

// Evaluates every shift in [0, delta) and returns the cheapest plan; ties
// break toward the smallest shift.
CheckpointPlan optimize_placement(const BinIndex& idx, std::size_t k, std::size_t delta,
                                  std::size_t n);

// Verification around a checkpoint t at which a and b qualify: scans left to
// the run start, probes the timestamp start + delta - 1 and walks it back
// toward t (abandoning the pair as soon as a violation proves the run is
// shorter than delta), then completes the scan forward. Returns the maximal
// run containing t when it is at least delta long, otherwise nothing.
std::optional<PairMatch> verify_pair_two_way(const Dataset& ds, std::size_t a, std::size_t b,
                                             std::size_t t, const Params& p);

// Pair discovery filtered at optimally placed checkpoints only. Equivalent
// to the full sweep output.
std::vector<PairMatch> discover_pairs_checkpoint(const Dataset& ds, const Params& p);

// Bundle verification around a checkpoint t: expands the seed backward to
// collect candidate groups with their run starts, probes each candidate at
// start + delta - 1 (walking back toward t, shedding members that violate
// epsilon and abandoning anything that falls below mu), then expands the
// survivors forward. Results are normalised to maximal intervals and maximal
// member sets, so every returned bundle is final.
std::vector<BundleMatch> verify_bundle_two_way(const Dataset& ds,
                                               const std::vector<std::size_t>& seed_group,
                                               std::size_t t, const Params& p);

// Bundle discovery filtered at optimally placed checkpoints only. Equivalent
// to the full sweep output. mu > n yields an empty result.
std::vector<BundleMatch> discover_bundles_checkpoint(const Dataset& ds, const Params& p);

}  // namespace tsb
