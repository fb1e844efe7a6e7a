#include "tsb/checkpoint.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "group_step.hpp"

namespace tsb {

std::vector<std::size_t> checkpoints_for_shift(std::size_t k, std::size_t delta,
                                               std::size_t shift) {
    if (delta == 0 || delta > k) {
        throw std::invalid_argument("checkpoints require 1 <= delta <= k");
    }
    if (shift >= delta) {
        throw std::invalid_argument("checkpoint shift must be smaller than delta");
    }
    std::vector<std::size_t> out;
    for (std::size_t c = shift; c < k; c += delta) {
        out.push_back(c);
    }
    return out;
}

std::vector<std::size_t> ensure_covering(std::vector<std::size_t> checkpoints, std::size_t k,
                                         std::size_t delta) {
    if (checkpoints.empty()) {
        throw std::invalid_argument("ensure_covering: empty checkpoint list");
    }
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.back() >= k) {
        throw std::invalid_argument("ensure_covering: checkpoints must be sorted and < k");
    }
    for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i) {
        if (checkpoints[i + 1] - checkpoints[i] > delta) {
            throw std::invalid_argument("ensure_covering: interior gap exceeds delta");
        }
    }
    while (checkpoints.front() > delta - 1) {
        checkpoints.insert(checkpoints.begin(), checkpoints.front() - delta);
    }
    while (checkpoints.back() + delta < k) {
        checkpoints.push_back(checkpoints.back() + delta);
    }
    return checkpoints;
}

double placement_cost(const BinIndex& idx, const std::vector<std::size_t>& checkpoints,
                      std::size_t n) {
    if (checkpoints.empty()) {
        throw std::invalid_argument("placement_cost: empty checkpoint list");
    }
    if (n == 0) {
        throw std::invalid_argument("placement_cost: n must be positive");
    }
    double cost = 0.0;
    for (std::size_t c : checkpoints) {
        cost += static_cast<double>(idx.max_bin_cardinality(c)) / static_cast<double>(n);
    }
    return cost;
}

CheckpointPlan optimize_placement(const BinIndex& idx, std::size_t k, std::size_t delta,
                                  std::size_t n) {
    CheckpointPlan best;
    for (std::size_t s = 0; s < delta; ++s) {
        auto cps = checkpoints_for_shift(k, delta, s);
        double cost = placement_cost(idx, cps, n);
        if (best.checkpoints.empty() || cost < best.cost) {
            best = {std::move(cps), s, cost};
        }
    }
    return best;
}

std::optional<PairMatch> verify_pair_two_way(const Dataset& ds, std::size_t a, std::size_t b,
                                             std::size_t t, const Params& p) {
    if (!pair_qualifies(ds, a, b, t, p.epsilon)) {
        throw std::invalid_argument("verify_pair_two_way: pair does not qualify at t");
    }
    std::size_t start = t;
    while (start > 0 && pair_qualifies(ds, a, b, start - 1, p.epsilon)) --start;
    std::size_t probe = start + p.delta - 1;  // last timestamp a delta-run must reach
    if (probe >= ds.k()) {
        return std::nullopt;
    }
    for (std::size_t q = probe; q > t; --q) {
        if (!pair_qualifies(ds, a, b, q, p.epsilon)) {
            return std::nullopt;
        }
    }
    std::size_t end = std::max(probe, t) + 1;
    while (end < ds.k() && pair_qualifies(ds, a, b, end, p.epsilon)) ++end;
    return PairMatch{a, b, {start, end}};
}

std::vector<PairMatch> discover_pairs_checkpoint(const Dataset& ds, const Params& p) {
    validate_params(ds, p, false);
    BinIndex idx = BinIndex::create(ds, p.epsilon);
    CheckpointPlan plan = optimize_placement(idx, ds.k(), p.delta, ds.n());
    std::vector<PairMatch> out;
    // End of the last accepted run per pair; later checkpoints inside that
    // run would rediscover it.
    std::unordered_map<std::uint64_t, std::size_t> accepted_until;
    for (std::size_t c : plan.checkpoints) {
        idx.for_each_candidate_pair(c, [&](std::size_t a, std::size_t b) {
            std::uint64_t key = static_cast<std::uint64_t>(a) * ds.n() + b;
            auto it = accepted_until.find(key);
            if (it != accepted_until.end() && c < it->second) {
                return;
            }
            if (auto m = verify_pair_two_way(ds, a, b, c, p)) {
                accepted_until[key] = m->interval.end;
                out.push_back(*m);
            }
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool tight_at(const Dataset& ds, const detail::Members& members, std::size_t t, double eps) {
    return group_spread(ds, members, t) <= eps;
}

// Extends the interval to the true run start, then rejects the candidate if
// any outside series fits the group throughout the extended interval. What
// remains satisfies every bundle invariant on its own.
std::optional<BundleMatch> finalize_candidate(const Dataset& ds, BundleMatch m, double eps) {
    while (m.interval.start > 0 && tight_at(ds, m.members, m.interval.start - 1, eps)) {
        --m.interval.start;
    }
    std::vector<std::size_t> extended(m.members);
    extended.push_back(0);
    for (std::size_t x = 0; x < ds.n(); ++x) {
        if (std::binary_search(m.members.begin(), m.members.end(), x)) continue;
        extended.back() = x;
        bool fits = true;
        for (std::size_t t = m.interval.start; t < m.interval.end && fits; ++t) {
            fits = tight_at(ds, extended, t, eps);
        }
        if (fits) {
            return std::nullopt;
        }
    }
    return m;
}

}  // namespace

std::vector<BundleMatch> verify_bundle_two_way(const Dataset& ds,
                                               const std::vector<std::size_t>& seed_group,
                                               std::size_t t, const Params& p) {
    validate_params(ds, p, true);
    if (t >= ds.k()) {
        throw std::out_of_range("verify_bundle_two_way: timestamp out of range");
    }
    if (seed_group.size() < p.mu) {
        throw std::invalid_argument("verify_bundle_two_way: seed smaller than mu");
    }
    detail::Members seed(seed_group);
    std::sort(seed.begin(), seed.end());
    if (group_spread(ds, seed, t) > p.epsilon) {
        throw std::invalid_argument("verify_bundle_two_way: seed not within epsilon at t");
    }

    // Backward pass: every group reachable from the seed, with the earliest
    // timestamp from which its members stay within epsilon through t.
    auto backward = detail::expand_backward(ds, seed, t, t + 1, p.epsilon, p.mu);

    std::vector<BundleMatch> out;
    for (BundleMatch& q : backward) {
        std::size_t probe = q.interval.start + p.delta - 1;
        if (probe >= ds.k()) {
            continue;  // too close to the end to ever reach delta
        }
        // Eager probe: walk from the delta boundary back toward t. Members
        // may drop off, but any group falling below mu, or failing before
        // the walk completes, can never span delta and is abandoned.
        std::vector<detail::Members> survivors{q.members};
        for (std::size_t q_t = probe; q_t > t && !survivors.empty(); --q_t) {
            std::vector<detail::Members> next;
            for (detail::Members& g : survivors) {
                for (detail::Members& c :
                     detail::tight_children(ds, g, q_t, p.epsilon, p.mu)) {
                    next.push_back(std::move(c));
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            survivors = std::move(next);
        }
        // Each survivor is within epsilon from q's start through the probe
        // boundary; completing the run forward settles its true end.
        std::size_t forward_from = std::max(probe, t) + 1;
        for (detail::Members& g : survivors) {
            for (BundleMatch& cand : detail::expand_forward(ds, g, forward_from,
                                                            q.interval.start, p.epsilon, p.mu)) {
                if (cand.interval.length() < p.delta) continue;
                if (auto final_match = finalize_candidate(ds, std::move(cand), p.epsilon)) {
                    out.push_back(std::move(*final_match));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BundleMatch> discover_bundles_checkpoint(const Dataset& ds, const Params& p) {
    validate_params(ds, p, true);
    if (p.mu > ds.n()) {
        return {};
    }
    BinIndex idx = BinIndex::create(ds, p.epsilon);
    CheckpointPlan plan = optimize_placement(idx, ds.k(), p.delta, ds.n());
    std::vector<BundleMatch> out;
    for (std::size_t c : plan.checkpoints) {
        for (detail::Members& seed : idx.maximal_anchored_groups(c, p.mu)) {
            // A seed already covered by a discovered bundle at this
            // checkpoint can only reproduce dominated candidates.
            bool covered = false;
            for (const BundleMatch& m : out) {
                if (m.interval.contains(c) && m.members.size() >= seed.size() &&
                    std::includes(m.members.begin(), m.members.end(), seed.begin(),
                                  seed.end())) {
                    covered = true;
                    break;
                }
            }
            if (covered) continue;
            for (BundleMatch& m : verify_bundle_two_way(ds, seed, c, p)) {
                out.push_back(std::move(m));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tsb
