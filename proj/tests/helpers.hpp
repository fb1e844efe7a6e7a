#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tsb/core.hpp"

namespace testutil {

// Rows of values -> Dataset with ids S0, S1, ...
inline tsb::Dataset make_dataset(const std::vector<std::vector<double>>& rows) {
    std::vector<tsb::Series> series;
    series.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        series.push_back({"S" + std::to_string(i), rows[i]});
    }
    return tsb::Dataset(std::move(series));
}

// Random walks on a 0.25-valued lattice, clamped to [-limit, limit] steps of
// the lattice. Quarter-unit values keep epsilon comparisons exact in double
// arithmetic, so boundary hits (difference exactly epsilon) are frequent and
// deterministic instead of being washed out by float noise.
inline tsb::Dataset random_lattice_dataset(std::mt19937_64& rng, std::size_t n, std::size_t k,
                                           int limit = 8) {
    std::uniform_int_distribution<int> start(-limit, limit);
    std::uniform_int_distribution<int> step(-2, 2);
    std::vector<std::vector<double>> rows(n, std::vector<double>(k));
    for (auto& row : rows) {
        int cur = start(rng);
        for (std::size_t t = 0; t < k; ++t) {
            cur += step(rng);
            if (cur > limit) cur = limit;
            if (cur < -limit) cur = -limit;
            row[t] = 0.25 * cur;
        }
    }
    return make_dataset(rows);
}

// Epsilon values aligned to the same lattice.
inline double random_lattice_epsilon(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> quarters(1, 6);
    return 0.25 * quarters(rng);
}

inline tsb::Params random_pair_params(std::mt19937_64& rng, std::size_t k) {
    std::uniform_int_distribution<std::size_t> delta(2, std::max<std::size_t>(2, k / 4));
    return {random_lattice_epsilon(rng), delta(rng), 0};
}

inline tsb::Params random_bundle_params(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<std::size_t> delta(2, std::max<std::size_t>(2, k / 4));
    std::uniform_int_distribution<std::size_t> mu(3, std::max<std::size_t>(3, n));
    return {random_lattice_epsilon(rng), delta(rng), mu(rng)};
}

}  // namespace testutil
