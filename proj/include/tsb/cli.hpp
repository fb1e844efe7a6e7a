#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsb/core.hpp"
#include "tsb/io.hpp"

namespace tsb {

struct RunConfig {
    std::string command;  // pairs | bundles | generate | benchmark
    std::string input;
    std::string output;  // empty: results go to standard output
    std::optional<ParamField> epsilon;
    std::optional<ParamField> delta;
    std::optional<ParamField> mu;
    std::string algorithm = "checkpoint";  // sweepline | checkpoint
    bool znormalize = false;
    std::string format = "json";  // json | csv
    std::uint64_t seed = 0;
    std::size_t gen_n = 0;
    std::size_t gen_k = 0;
    int repetitions = 3;
};

// "12", "2.5%" -> ParamField; anything else throws.
ParamField parse_value_spec(const std::string& text);

// Describes the first difference between two result sets (compared as
// canonical sorted sets), or nothing if they are equal.
std::optional<std::string> find_result_mismatch(std::vector<ResultRecord> a,
                                                std::vector<ResultRecord> b);

// Median-of-repetitions wall times for both algorithms on one task. The two
// result sets are compared and a mismatch throws with a diagnostic naming
// one differing match.
struct BenchTimings {
    double sweepline_ms = 0.0;
    double checkpoint_ms = 0.0;
    std::size_t matches = 0;
};

BenchTimings benchmark_pairs(const Dataset& ds, const Params& p, int repetitions);
BenchTimings benchmark_bundles(const Dataset& ds, const Params& p, int repetitions);

int run_pairs(const RunConfig& cfg);
int run_bundles(const RunConfig& cfg);
int run_generate(const RunConfig& cfg);
int run_benchmark(const RunConfig& cfg);

// Dispatches on cfg.command. Errors print one line to standard error and
// yield a nonzero status; an output file is only ever written completely.
int run(const RunConfig& cfg);

}  // namespace tsb
