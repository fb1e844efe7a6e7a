#pragma once

#include <algorithm>
#include <vector>

#include "tsb/bin_index.hpp"
#include "tsb/core.hpp"
#include "window_scan.hpp"

namespace tsb::detail {

using Members = std::vector<std::size_t>;

// Splits a tracked group at timestamp t into the inclusion-maximal subsets
// whose values still fit within eps, dropping any below min_size. When the
// whole group still qualifies the result is a single child equal to the
// parent, which is how callers detect survival.
inline std::vector<Members> tight_children(const Dataset& ds, const Members& members,
                                           std::size_t t, double eps, std::size_t min_size) {
    std::vector<BinIndex::Entry> entries;
    entries.reserve(members.size());
    for (std::size_t i : members) {
        entries.push_back({ds.value(i, t), i});
    }
    std::sort(entries.begin(), entries.end(),
              [](const BinIndex::Entry& x, const BinIndex::Entry& y) {
                  return x.value != y.value ? x.value < y.value : x.series < y.series;
              });
    std::vector<Members> children;
    for (auto [begin, end] : maximal_tight_ranges(entries, eps)) {
        if (end - begin < min_size) continue;
        Members child;
        child.reserve(end - begin);
        for (std::size_t e = begin; e < end; ++e) {
            child.push_back(entries[e].series);
        }
        std::sort(child.begin(), child.end());
        children.push_back(std::move(child));
    }
    return children;
}

// Walks a group forward from first_t to the end of the series. Groups shrink
// into their tight children as members drift off; every tracked group is
// emitted when it dies (or when the series ends) with the half-open interval
// [start_label, death). Children keep the caller's start_label: the caller
// is responsible for interval semantics across seeds.
inline std::vector<BundleMatch> expand_forward(const Dataset& ds, const Members& seed,
                                               std::size_t first_t, std::size_t start_label,
                                               double eps, std::size_t min_size) {
    std::vector<BundleMatch> out;
    std::vector<Members> active{seed};
    for (std::size_t t = first_t; t < ds.k() && !active.empty(); ++t) {
        std::vector<Members> next;
        for (Members& g : active) {
            auto children = tight_children(ds, g, t, eps, min_size);
            bool survived = children.size() == 1 && children.front().size() == g.size();
            if (!survived) {
                out.push_back({std::move(g), {start_label, t}});
            }
            for (Members& c : children) {
                next.push_back(std::move(c));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        active = std::move(next);
    }
    for (Members& g : active) {
        out.push_back({std::move(g), {start_label, ds.k()}});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Mirror image of expand_forward: walks from first_t down to timestamp 0 and
// emits (members, [death + 1, end_label)) as groups die. end_label is
// exclusive, so a seed verified at timestamp c passes end_label = c + 1.
inline std::vector<BundleMatch> expand_backward(const Dataset& ds, const Members& seed,
                                                std::size_t first_t_plus_1,
                                                std::size_t end_label, double eps,
                                                std::size_t min_size) {
    std::vector<BundleMatch> out;
    std::vector<Members> active{seed};
    for (std::size_t t = first_t_plus_1; t-- > 0 && !active.empty();) {
        std::vector<Members> next;
        for (Members& g : active) {
            auto children = tight_children(ds, g, t, eps, min_size);
            bool survived = children.size() == 1 && children.front().size() == g.size();
            if (!survived) {
                out.push_back({std::move(g), {t + 1, end_label}});
            }
            for (Members& c : children) {
                next.push_back(std::move(c));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        active = std::move(next);
    }
    for (Members& g : active) {
        out.push_back({std::move(g), {0, end_label}});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tsb::detail
