#pragma once

#include <vector>

#include "tsb/core.hpp"

namespace tsb {

// Reference implementations. They derive results straight from the
// definitions with no indexing or pruning, and define ground truth for the
// discovery algorithms. Intended for small instances only.

// Every maximal run of length >= delta during which a pair of series stays
// within epsilon, for all n*(n-1)/2 pairs. O(n^2 * k).
std::vector<PairMatch> oracle_pairs(const Dataset& ds, double epsilon, std::size_t delta);
std::vector<PairMatch> oracle_pairs(const Dataset& ds, const Params& p);

// Exhaustive subset enumeration: every member set of size >= mu is tested on
// every maximal run of length >= delta, keeping (G, I) only when no strict
// superset of G also stays within epsilon throughout I. mu >= 2 is accepted
// here so tests can cross-check bundles of size two against pair runs.
// Refuses datasets with n > max_series (default 20) since the scan is
// exponential in n.
std::vector<BundleMatch> oracle_bundles(const Dataset& ds, double epsilon, std::size_t delta,
                                        std::size_t mu, std::size_t max_series = 20);
std::vector<BundleMatch> oracle_bundles(const Dataset& ds, const Params& p);

}  // namespace tsb
