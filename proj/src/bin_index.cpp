#include "tsb/bin_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "window_scan.hpp"

namespace tsb {

BinIndex BinIndex::create(const Dataset& ds, double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("bin index requires a finite epsilon > 0");
    }
    BinIndex idx;
    idx.epsilon_ = epsilon;
    idx.origin_ = ds.min_value();
    idx.slots_.resize(ds.k());
    for (std::size_t t = 0; t < ds.k(); ++t) {
        Slot& slot = idx.slots_[t];
        slot.entries.reserve(ds.n());
        for (std::size_t i = 0; i < ds.n(); ++i) {
            slot.entries.push_back({ds.value(i, t), i});
        }
        std::sort(slot.entries.begin(), slot.entries.end(), [](const Entry& x, const Entry& y) {
            return x.value != y.value ? x.value < y.value : x.series < y.series;
        });
        for (std::size_t e = 0; e < slot.entries.size(); ++e) {
            std::int64_t bin = idx.bin_of(slot.entries[e].value);
            if (slot.bins.empty() || slot.bins.back() != bin) {
                slot.bins.push_back(bin);
                slot.offsets.push_back(e);
            }
        }
        slot.offsets.push_back(slot.entries.size());
    }
    return idx;
}

std::int64_t BinIndex::bin_of(double value) const {
    return static_cast<std::int64_t>(std::floor((value - origin_) / epsilon_));
}

std::span<const BinIndex::Entry> BinIndex::entries_at(std::size_t t) const {
    if (t >= slots_.size()) {
        throw std::out_of_range("bin index: timestamp out of range");
    }
    return slots_[t].entries;
}

std::span<const std::int64_t> BinIndex::bin_ids_at(std::size_t t) const {
    if (t >= slots_.size()) {
        throw std::out_of_range("bin index: timestamp out of range");
    }
    return slots_[t].bins;
}

std::span<const BinIndex::Entry> BinIndex::bin_entries(std::size_t t, std::int64_t bin) const {
    if (t >= slots_.size()) {
        throw std::out_of_range("bin index: timestamp out of range");
    }
    const Slot& slot = slots_[t];
    auto it = std::lower_bound(slot.bins.begin(), slot.bins.end(), bin);
    if (it == slot.bins.end() || *it != bin) {
        return {};
    }
    std::size_t pos = static_cast<std::size_t>(it - slot.bins.begin());
    return {slot.entries.data() + slot.offsets[pos], slot.offsets[pos + 1] - slot.offsets[pos]};
}

std::size_t BinIndex::max_bin_cardinality(std::size_t t) const {
    if (t >= slots_.size()) {
        throw std::out_of_range("bin index: timestamp out of range");
    }
    const Slot& slot = slots_[t];
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < slot.offsets.size(); ++i) {
        best = std::max(best, slot.offsets[i + 1] - slot.offsets[i]);
    }
    return best;
}

std::vector<std::size_t> BinIndex::anchored_group(std::size_t t, double anchor_value) const {
    std::int64_t z = bin_of(anchor_value);
    std::vector<std::size_t> out;
    for (std::int64_t bin : {z - 1, z}) {
        for (const Entry& e : bin_entries(t, bin)) {
            if (e.value <= anchor_value && anchor_value - e.value <= epsilon_) {
                out.push_back(e.series);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> BinIndex::candidate_pairs_at(
    std::size_t t) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for_each_candidate_pair(t, [&](std::size_t a, std::size_t b) { out.emplace_back(a, b); });
    return out;
}

std::vector<std::vector<std::size_t>> BinIndex::maximal_anchored_groups(
    std::size_t t, std::size_t min_size) const {
    auto entries = entries_at(t);
    std::vector<std::vector<std::size_t>> out;
    for (auto [begin, end] : detail::maximal_tight_ranges(entries, epsilon_)) {
        if (end - begin < min_size) continue;
        std::vector<std::size_t> members;
        members.reserve(end - begin);
        for (std::size_t e = begin; e < end; ++e) {
            members.push_back(entries[e].series);
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace tsb
