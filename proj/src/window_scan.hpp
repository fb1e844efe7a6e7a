#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tsb/bin_index.hpp"

namespace tsb::detail {

// Given entries sorted by (value, series), yields the inclusion-maximal
// contiguous index ranges [begin, end) whose values fit into a window
// [v - eps, v] anchored at an observed value. Qualification uses the exact
// subtraction predicate (anchor - value <= eps), never a precomputed window
// edge, so results agree bit-for-bit with the pair predicate.
inline std::vector<std::pair<std::size_t, std::size_t>> maximal_tight_ranges(
    std::span<const BinIndex::Entry> entries, double eps) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t m = entries.size();
    std::size_t lo = 0;
    std::size_t d = 0;
    while (d < m) {
        std::size_t group_end = d;  // last index sharing entries[d].value
        while (group_end + 1 < m && entries[group_end + 1].value == entries[d].value) {
            ++group_end;
        }
        while (entries[d].value - entries[lo].value > eps) ++lo;
        std::size_t next = group_end + 1;
        if (next >= m) {
            out.emplace_back(lo, group_end + 1);
            break;
        }
        std::size_t next_lo = lo;
        while (entries[next].value - entries[next_lo].value > eps) ++next_lo;
        if (next_lo > lo) {
            out.emplace_back(lo, group_end + 1);
        }
        lo = next_lo;
        d = next;
    }
    return out;
}

}  // namespace tsb::detail
