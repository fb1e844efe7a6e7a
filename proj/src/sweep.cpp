#include "tsb/sweep.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "tsb/bin_index.hpp"
#include "group_step.hpp"

namespace tsb {

Interval verify_pair_forward(const Dataset& ds, std::size_t a, std::size_t b, std::size_t t,
                             double epsilon) {
    if (!pair_qualifies(ds, a, b, t, epsilon)) {
        throw std::invalid_argument("verify_pair_forward: pair does not qualify at t");
    }
    std::size_t e = t + 1;
    while (e < ds.k() && pair_qualifies(ds, a, b, e, epsilon)) ++e;
    return {t, e};
}

std::vector<PairMatch> discover_pairs_sweepline(const Dataset& ds, const Params& p) {
    validate_params(ds, p, false);
    BinIndex idx = BinIndex::create(ds, p.epsilon);
    std::vector<PairMatch> out;
    // End of the run last verified per pair; candidates inside an already
    // examined run (reported or too short) are skipped.
    std::unordered_map<std::uint64_t, std::size_t> examined_until;
    for (std::size_t t = 0; t < ds.k(); ++t) {
        idx.for_each_candidate_pair(t, [&](std::size_t a, std::size_t b) {
            std::uint64_t key = static_cast<std::uint64_t>(a) * ds.n() + b;
            auto it = examined_until.find(key);
            if (it != examined_until.end() && t < it->second) {
                return;
            }
            Interval run = verify_pair_forward(ds, a, b, t, p.epsilon);
            examined_until[key] = run.end;
            if (run.length() >= p.delta) {
                out.push_back({a, b, run});
            }
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BundleMatch> verify_bundle_forward(const Dataset& ds,
                                               const std::vector<std::size_t>& seed_group,
                                               std::size_t t, const Params& p) {
    validate_params(ds, p, true);
    if (t >= ds.k()) {
        throw std::out_of_range("verify_bundle_forward: timestamp out of range");
    }
    if (seed_group.size() < p.mu) {
        throw std::invalid_argument("verify_bundle_forward: seed smaller than mu");
    }
    detail::Members seed(seed_group);
    std::sort(seed.begin(), seed.end());
    if (group_spread(ds, seed, t) > p.epsilon) {
        throw std::invalid_argument("verify_bundle_forward: seed not within epsilon at t");
    }
    return detail::expand_forward(ds, seed, t + 1, t, p.epsilon, p.mu);
}

namespace {

// Walks left from `from` (where the group is known to be within epsilon) to
// the first timestamp of the run the group is on.
std::size_t run_start_before(const Dataset& ds, const detail::Members& members, std::size_t from,
                             double epsilon) {
    std::size_t s = from;
    while (s > 0 && group_spread(ds, members, s - 1) <= epsilon) --s;
    return s;
}

}  // namespace

std::vector<BundleMatch> discover_bundles_sweepline(const Dataset& ds, const Params& p) {
    validate_params(ds, p, true);
    if (p.mu > ds.n()) {
        return {};
    }
    BinIndex idx = BinIndex::create(ds, p.epsilon);
    std::vector<BundleMatch> out;

    // Tracked groups, keyed by member set, valued with the first timestamp of
    // the run they are on. A tracked group is always within epsilon from its
    // start through the previous timestamp.
    std::map<detail::Members, std::size_t> active;

    auto report = [&](std::vector<std::pair<detail::Members, std::size_t>>& dying,
                      std::size_t end) {
        // Among groups ending at the same timestamp with the same start, a
        // strict subset is covered by its superset and is not maximal.
        for (auto& [members, start] : dying) {
            if (end - start < p.delta) continue;
            bool covered = false;
            for (auto& [other, other_start] : dying) {
                if (other_start != start || other.size() <= members.size()) continue;
                if (std::includes(other.begin(), other.end(), members.begin(), members.end())) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                out.push_back({members, {start, end}});
            }
        }
    };

    for (std::size_t t = 0; t < ds.k(); ++t) {
        std::map<detail::Members, std::size_t> next;
        auto track = [&](detail::Members&& m, std::size_t start) {
            auto [it, inserted] = next.try_emplace(std::move(m), start);
            if (!inserted && start < it->second) {
                it->second = start;
            }
        };
        std::vector<std::pair<detail::Members, std::size_t>> dying;
        for (auto& [members, start] : active) {
            auto children = detail::tight_children(ds, members, t, p.epsilon, p.mu);
            bool survived = children.size() == 1 && children.front().size() == members.size();
            if (!survived) {
                dying.emplace_back(members, start);
            }
            for (detail::Members& c : children) {
                std::size_t s = start;
                if (c.size() < members.size()) {
                    // A shrunken child may have been within epsilon well
                    // before its parent's run began (as part of some other
                    // group), so its run start is located, not inherited.
                    auto known = next.find(c);
                    if (known != next.end() && known->second <= start) {
                        s = known->second;
                    } else {
                        s = run_start_before(ds, c, start, p.epsilon);
                    }
                }
                track(std::move(c), s);
            }
        }
        for (detail::Members& w : idx.maximal_anchored_groups(t, p.mu)) {
            track(std::move(w), t);
        }
        // Children inherited from different parents can be strict subsets of
        // a sibling sharing the same run start; those are not maximal and are
        // dropped. Domination cannot pair entries with different starts (a
        // subset stays within epsilon wherever its superset does, so the
        // subset's run cannot begin later; covering it needs equality), and
        // fresh maximal windows are mutually incomparable, so only same-start
        // entries older than t are tested.
        std::map<std::size_t, std::vector<const detail::Members*>> by_start;
        for (auto& [members, start] : next) {
            if (start < t) by_start[start].push_back(&members);
        }
        std::vector<const detail::Members*> dominated;
        for (auto& [start, group] : by_start) {
            for (std::size_t i = 0; i < group.size(); ++i) {
                for (std::size_t j = 0; j < group.size(); ++j) {
                    if (group[j]->size() <= group[i]->size()) continue;
                    if (std::includes(group[j]->begin(), group[j]->end(), group[i]->begin(),
                                      group[i]->end())) {
                        dominated.push_back(group[i]);
                        break;
                    }
                }
            }
        }
        for (const detail::Members* m : dominated) {
            next.erase(*m);
        }
        report(dying, t);
        active = std::move(next);
    }
    std::vector<std::pair<detail::Members, std::size_t>> final_dying(active.begin(),
                                                                     active.end());
    report(final_dying, ds.k());

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tsb
