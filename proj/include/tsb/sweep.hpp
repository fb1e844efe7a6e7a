#pragma once

#include <vector>

#include "tsb/core.hpp"

namespace tsb {

// Scans forward from t and returns the run of consecutive timestamps
// (starting at t) on which a and b stay within epsilon, as [t, e). The pair
// must qualify at t itself. No delta filtering is applied here.
Interval verify_pair_forward(const Dataset& ds, std::size_t a, std::size_t b, std::size_t t,
                             double epsilon);

// Full sweep over all timestamps: candidate pairs come from the value index,
// every maximal run is verified exactly once, and runs shorter than delta are
// dropped. Returns the complete set of qualifying PairMatches, sorted.
std::vector<PairMatch> discover_pairs_sweepline(const Dataset& ds, const Params& p);

// Expands a seed group forward from timestamp t. Tracked groups shed members
// that drift beyond epsilon; each surviving subset of size >= mu continues
// with its own lifetime and is reported when it dies, as (members, [t, e)).
// Candidates are not filtered by delta. The seed must be within epsilon at t
// and have at least mu members.
std::vector<BundleMatch> verify_bundle_forward(const Dataset& ds,
                                               const std::vector<std::size_t>& seed_group,
                                               std::size_t t, const Params& p);

// Full sweep bundle discovery. Seeds are the maximal anchored windows at each
// timestamp; tracked groups carry the earliest timestamp from which their
// members have stayed within epsilon, so reported intervals are maximal in
// time, and subset candidates that a tracked superset covers over the same
// interval are suppressed, so member sets are maximal too. Returns exactly
// the qualifying bundles, sorted. mu > n yields an empty result.
std::vector<BundleMatch> discover_bundles_sweepline(const Dataset& ds, const Params& p);

}  // namespace tsb
