#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace tsb {

// Half-open timestamp interval [start, end).
struct Interval {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - start; }
    bool contains(std::size_t t) const { return t >= start && t < end; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// A maximal run during which two series stay within epsilon of each other.
// Series are addressed by index into the owning Dataset; a < b always.
struct PairMatch {
    std::size_t a = 0;
    std::size_t b = 0;
    Interval interval;

    friend bool operator==(const PairMatch&, const PairMatch&) = default;
    friend auto operator<=>(const PairMatch&, const PairMatch&) = default;
};

// A group of at least mu series whose value spread stays within epsilon over
// the interval. Members are sorted series indices. The interval is maximal in
// time and the member set is maximal for that interval.
struct BundleMatch {
    std::vector<std::size_t> members;
    Interval interval;

    friend bool operator==(const BundleMatch&, const BundleMatch&) = default;
    friend auto operator<=>(const BundleMatch&, const BundleMatch&) = default;
};

// Discovery parameters. epsilon: value closeness threshold (inclusive).
// delta: minimum run length in timestamps. mu: minimum bundle membership
// (unused for pair discovery; 0 means unset).
struct Params {
    double epsilon = 0.0;
    std::size_t delta = 0;
    std::size_t mu = 0;
};

struct Series {
    std::string id;
    std::vector<double> values;
};

// In-memory collection of n co-evolving series sharing k timestamps.
// Construction validates shape (equal lengths, k >= 1, n >= 1), id uniqueness
// and finiteness of every value, and caches the global value range.
class Dataset {
  public:
    explicit Dataset(std::vector<Series> series);

    std::size_t n() const { return ids_.size(); }
    std::size_t k() const { return k_; }

    const std::string& id(std::size_t i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }

    double value(std::size_t i, std::size_t t) const { return values_[i * k_ + t]; }
    std::span<const double> series_values(std::size_t i) const {
        return {values_.data() + i * k_, k_};
    }

    double min_value() const { return vmin_; }
    double max_value() const { return vmax_; }
    double value_range() const { return vmax_ - vmin_; }

  private:
    std::vector<std::string> ids_;
    std::vector<double> values_;  // row-major, n * k
    std::size_t k_ = 0;
    double vmin_ = std::numeric_limits<double>::infinity();
    double vmax_ = -std::numeric_limits<double>::infinity();
};

// Exact inclusive predicate shared by every algorithm and the reference
// implementations: |X_a^t - X_b^t| <= epsilon, no tolerance.
bool pair_qualifies(const Dataset& ds, std::size_t a, std::size_t b, std::size_t t,
                    double epsilon);

// max - min over the members' values at t. Throws on an empty group or
// out-of-range indices.
double group_spread(const Dataset& ds, std::span<const std::size_t> members, std::size_t t);

// Validates parameters against a dataset: epsilon > 0 and 1 < delta <= k.
// require_mu additionally demands mu > 2 (bundle discovery). Note mu may
// exceed n; discovery then yields an empty result rather than an error.
void validate_params(const Dataset& ds, const Params& p, bool require_mu);

// Post-hoc validators used by tests and result consumers. They re-derive
// every invariant from raw values: qualification throughout the interval,
// delta and mu thresholds, maximality in time, and (for bundles) maximality
// of membership. On failure the reason is written to *why when provided.
bool is_valid_pair(const Dataset& ds, const Params& p, const PairMatch& m,
                   std::string* why = nullptr);
bool is_valid_bundle(const Dataset& ds, const Params& p, const BundleMatch& m,
                     std::string* why = nullptr);

}  // namespace tsb
