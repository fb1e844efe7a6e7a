#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tsb/core.hpp"

namespace tsb {

// Per-timestamp value index. Each timestamp's values are bucketed into bins
// of width epsilon anchored at the global dataset minimum: bin(v) =
// floor((v - origin) / epsilon). Within a timestamp, entries are kept sorted
// by (value, series index), so each bin is a contiguous slice. Any two values
// within epsilon of each other land in the same bin or in adjacent bins,
// which is what makes the two-bin window scan complete.
class BinIndex {
  public:
    struct Entry {
        double value;
        std::size_t series;
    };

    static BinIndex create(const Dataset& ds, double epsilon);

    double epsilon() const { return epsilon_; }
    double origin() const { return origin_; }
    std::size_t timestamps() const { return slots_.size(); }

    std::int64_t bin_of(double value) const;

    // Entries at timestamp t sorted by (value, series).
    std::span<const Entry> entries_at(std::size_t t) const;

    // Bin ids present at t, ascending.
    std::span<const std::int64_t> bin_ids_at(std::size_t t) const;

    // Entries of one bin at t; empty when the bin is not populated.
    std::span<const Entry> bin_entries(std::size_t t, std::int64_t bin) const;

    std::size_t max_bin_cardinality(std::size_t t) const;

    // All series whose value at t lies in the window [anchor - eps, anchor],
    // both ends inclusive. Only the anchor's bin and the bin directly below
    // it are inspected. Returns sorted series indices; the anchor's own
    // series is included whenever its value qualifies.
    std::vector<std::size_t> anchored_group(std::size_t t, double anchor_value) const;

    // Every unordered pair (a, b), a < b, with |X_a^t - X_b^t| <= epsilon,
    // each produced exactly once: a pair is generated when the scan anchors
    // at its larger value, ties resolved by series index.
    std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs_at(std::size_t t) const;

    // Calls fn(a, b) for each candidate pair at t without materialising the
    // vector; iteration order is deterministic.
    template <typename F>
    void for_each_candidate_pair(std::size_t t, F&& fn) const {
        auto entries = entries_at(t);
        std::size_t lo = 0;
        for (std::size_t i = 1; i < entries.size(); ++i) {
            while (entries[i].value - entries[lo].value > epsilon_) ++lo;
            for (std::size_t j = lo; j < i; ++j) {
                std::size_t a = entries[j].series;
                std::size_t b = entries[i].series;
                if (a < b) {
                    fn(a, b);
                } else {
                    fn(b, a);
                }
            }
        }
    }

    // Seed groups for bundle discovery: the inclusion-maximal anchored
    // windows at t, restricted to those with at least min_size members.
    // Members are sorted series indices.
    std::vector<std::vector<std::size_t>> maximal_anchored_groups(std::size_t t,
                                                                  std::size_t min_size) const;

  private:
    struct Slot {
        std::vector<Entry> entries;        // sorted by (value, series)
        std::vector<std::int64_t> bins;    // ascending bin ids
        std::vector<std::size_t> offsets;  // bins.size() + 1 entry offsets
    };

    double epsilon_ = 0.0;
    double origin_ = 0.0;
    std::vector<Slot> slots_;
};

}  // namespace tsb
