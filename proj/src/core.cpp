#include "tsb/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace tsb {

Dataset::Dataset(std::vector<Series> series) {
    if (series.empty()) {
        throw std::invalid_argument("dataset requires at least one series");
    }
    k_ = series.front().values.size();
    if (k_ == 0) {
        throw std::invalid_argument("dataset requires at least one timestamp");
    }
    ids_.reserve(series.size());
    values_.reserve(series.size() * k_);
    std::unordered_set<std::string> seen;
    for (auto& s : series) {
        if (s.id.empty()) {
            throw std::invalid_argument("series id must be non-empty");
        }
        if (!seen.insert(s.id).second) {
            throw std::invalid_argument("duplicate series id: " + s.id);
        }
        if (s.values.size() != k_) {
            throw std::invalid_argument("series " + s.id + " has " +
                                        std::to_string(s.values.size()) + " values, expected " +
                                        std::to_string(k_));
        }
        for (double v : s.values) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("series " + s.id + " contains a non-finite value");
            }
            vmin_ = std::min(vmin_, v);
            vmax_ = std::max(vmax_, v);
        }
        ids_.push_back(std::move(s.id));
        values_.insert(values_.end(), s.values.begin(), s.values.end());
    }
}

bool pair_qualifies(const Dataset& ds, std::size_t a, std::size_t b, std::size_t t,
                    double epsilon) {
    if (a >= ds.n() || b >= ds.n()) {
        throw std::out_of_range("pair_qualifies: series index out of range");
    }
    if (t >= ds.k()) {
        throw std::out_of_range("pair_qualifies: timestamp out of range");
    }
    return std::fabs(ds.value(a, t) - ds.value(b, t)) <= epsilon;
}

double group_spread(const Dataset& ds, std::span<const std::size_t> members, std::size_t t) {
    if (members.empty()) {
        throw std::invalid_argument("group_spread: empty group");
    }
    if (t >= ds.k()) {
        throw std::out_of_range("group_spread: timestamp out of range");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i : members) {
        if (i >= ds.n()) {
            throw std::out_of_range("group_spread: series index out of range");
        }
        double v = ds.value(i, t);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo;
}

void validate_params(const Dataset& ds, const Params& p, bool require_mu) {
    if (!(p.epsilon > 0.0) || !std::isfinite(p.epsilon)) {
        throw std::invalid_argument("epsilon must be a finite value > 0");
    }
    if (p.delta <= 1) {
        throw std::invalid_argument("delta must be > 1");
    }
    if (p.delta > ds.k()) {
        throw std::invalid_argument("delta must not exceed the series length " +
                                    std::to_string(ds.k()));
    }
    if (require_mu && p.mu <= 2) {
        throw std::invalid_argument("mu must be > 2");
    }
}

namespace {

bool fail(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

bool group_tight(const Dataset& ds, std::span<const std::size_t> members, std::size_t t,
                 double eps) {
    return group_spread(ds, members, t) <= eps;
}

}  // namespace

bool is_valid_pair(const Dataset& ds, const Params& p, const PairMatch& m, std::string* why) {
    if (m.a >= m.b || m.b >= ds.n()) {
        return fail(why, "series indices must satisfy a < b < n");
    }
    if (m.interval.start >= m.interval.end || m.interval.end > ds.k()) {
        return fail(why, "interval must be non-empty and within [0, k)");
    }
    if (m.interval.length() < p.delta) {
        return fail(why, "interval shorter than delta");
    }
    for (std::size_t t = m.interval.start; t < m.interval.end; ++t) {
        if (!pair_qualifies(ds, m.a, m.b, t, p.epsilon)) {
            return fail(why, "pair exceeds epsilon at t=" + std::to_string(t));
        }
    }
    if (m.interval.start > 0 && pair_qualifies(ds, m.a, m.b, m.interval.start - 1, p.epsilon)) {
        return fail(why, "interval extendable to the left");
    }
    if (m.interval.end < ds.k() && pair_qualifies(ds, m.a, m.b, m.interval.end, p.epsilon)) {
        return fail(why, "interval extendable to the right");
    }
    return true;
}

bool is_valid_bundle(const Dataset& ds, const Params& p, const BundleMatch& m, std::string* why) {
    if (m.members.size() < p.mu) {
        return fail(why, "fewer members than mu");
    }
    if (!std::is_sorted(m.members.begin(), m.members.end()) ||
        std::adjacent_find(m.members.begin(), m.members.end()) != m.members.end()) {
        return fail(why, "members must be sorted and unique");
    }
    if (m.members.back() >= ds.n()) {
        return fail(why, "member index out of range");
    }
    if (m.interval.start >= m.interval.end || m.interval.end > ds.k()) {
        return fail(why, "interval must be non-empty and within [0, k)");
    }
    if (m.interval.length() < p.delta) {
        return fail(why, "interval shorter than delta");
    }
    for (std::size_t t = m.interval.start; t < m.interval.end; ++t) {
        if (!group_tight(ds, m.members, t, p.epsilon)) {
            return fail(why, "spread exceeds epsilon at t=" + std::to_string(t));
        }
    }
    if (m.interval.start > 0 && group_tight(ds, m.members, m.interval.start - 1, p.epsilon)) {
        return fail(why, "interval extendable to the left");
    }
    if (m.interval.end < ds.k() && group_tight(ds, m.members, m.interval.end, p.epsilon)) {
        return fail(why, "interval extendable to the right");
    }
    // Membership maximality: adding any single outside series must break the
    // spread somewhere in the interval. A violating strict superset always
    // implies a violating single addition, so this check is complete.
    std::vector<std::size_t> extended(m.members.begin(), m.members.end());
    extended.push_back(0);
    for (std::size_t x = 0; x < ds.n(); ++x) {
        if (std::binary_search(m.members.begin(), m.members.end(), x)) continue;
        extended.back() = x;
        bool always_tight = true;
        for (std::size_t t = m.interval.start; t < m.interval.end && always_tight; ++t) {
            always_tight = group_tight(ds, extended, t, p.epsilon);
        }
        if (always_tight) {
            return fail(why, "series " + std::to_string(x) +
                                 " fits the group throughout the interval");
        }
    }
    return true;
}

}  // namespace tsb
