#include "tsb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tsb {

std::vector<PairMatch> oracle_pairs(const Dataset& ds, double epsilon, std::size_t delta) {
    std::vector<PairMatch> out;
    for (std::size_t a = 0; a + 1 < ds.n(); ++a) {
        for (std::size_t b = a + 1; b < ds.n(); ++b) {
            std::size_t t = 0;
            while (t < ds.k()) {
                if (!pair_qualifies(ds, a, b, t, epsilon)) {
                    ++t;
                    continue;
                }
                std::size_t start = t;
                while (t < ds.k() && pair_qualifies(ds, a, b, t, epsilon)) ++t;
                if (t - start >= delta) {
                    out.push_back({a, b, {start, t}});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PairMatch> oracle_pairs(const Dataset& ds, const Params& p) {
    validate_params(ds, p, false);
    return oracle_pairs(ds, p.epsilon, p.delta);
}

namespace {

bool subset_tight(const Dataset& ds, const std::vector<std::size_t>& members, std::size_t t,
                  double eps) {
    double lo = ds.value(members.front(), t);
    double hi = lo;
    for (std::size_t i : members) {
        double v = ds.value(i, t);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo <= eps;
}

bool dominated_on(const Dataset& ds, const std::vector<std::size_t>& members, std::size_t start,
                  std::size_t end, double eps) {
    // A strict superset staying within epsilon over [start, end) exists iff
    // some single outside series can be added without breaking the spread.
    std::vector<std::size_t> extended(members);
    extended.push_back(0);
    for (std::size_t x = 0; x < ds.n(); ++x) {
        if (std::find(members.begin(), members.end(), x) != members.end()) continue;
        extended.back() = x;
        bool tight = true;
        for (std::size_t t = start; t < end && tight; ++t) {
            tight = subset_tight(ds, extended, t, eps);
        }
        if (tight) return true;
    }
    return false;
}

}  // namespace

std::vector<BundleMatch> oracle_bundles(const Dataset& ds, double epsilon, std::size_t delta,
                                        std::size_t mu, std::size_t max_series) {
    if (ds.n() > max_series) {
        throw std::invalid_argument("oracle_bundles: dataset exceeds the " +
                                    std::to_string(max_series) + "-series enumeration limit");
    }
    if (mu < 2) {
        throw std::invalid_argument("oracle_bundles: mu must be >= 2");
    }
    std::vector<BundleMatch> out;
    const std::size_t n = ds.n();
    std::vector<std::size_t> members;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) < mu) continue;
        members.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) members.push_back(i);
        }
        std::size_t t = 0;
        while (t < ds.k()) {
            if (!subset_tight(ds, members, t, epsilon)) {
                ++t;
                continue;
            }
            std::size_t start = t;
            while (t < ds.k() && subset_tight(ds, members, t, epsilon)) ++t;
            if (t - start >= delta && !dominated_on(ds, members, start, t, epsilon)) {
                out.push_back({members, {start, t}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BundleMatch> oracle_bundles(const Dataset& ds, const Params& p) {
    validate_params(ds, p, true);
    return oracle_bundles(ds, p.epsilon, p.delta, p.mu);
}

}  // namespace tsb
