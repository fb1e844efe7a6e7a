#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsb/core.hpp"

namespace tsb {

// Parsed but not yet validated-as-a-dataset CSV content: one row per series,
// rectangular, ids unique.
struct RawTable {
    bool has_header = false;
    std::vector<std::string> ids;
    std::vector<std::vector<double>> rows;
};

// Reads the wide CSV layout: one row per series, first field the series id,
// remaining fields numeric values, with an optional leading header row whose
// first field is the literal "id". Parse failures report 1-based row and
// column positions.
RawTable parse_csv(std::istream& in);

// parse_csv + Dataset construction. IO failures name the path.
Dataset load_csv(const std::string& path);

// Per-series z-normalization using the sample mean and population standard
// deviation. A constant series (sigma 0) maps to all zeros.
Dataset z_normalize(const Dataset& ds);

// Random-walk generator: x_0 ~ N(0,1), steps ~ N(0,1), seeded, so identical
// (n, k, seed) arguments reproduce the identical dataset. Series ids are
// "S0", "S1", ... zero-padded to the width of n - 1.
Dataset generate_synthetic(std::size_t n, std::size_t k, std::uint64_t seed);

// One discovery parameter, either absolute or a percentage to resolve
// against the dataset (epsilon: percent of the global value range; delta:
// percent of the series length; mu: percent of the series count).
struct ParamField {
    double value = 0.0;
    bool percent = false;
};

struct ParamSpec {
    ParamField epsilon;
    ParamField delta;
    std::optional<ParamField> mu;
};

// Resolves a ParamSpec against a dataset. Percentages round half up; delta
// is floored at 2 and mu at 3. Absolute delta and mu must be integers.
// Violations of the parameter invariants name the offending parameter.
Params resolve_params(const ParamSpec& spec, const Dataset& ds);

// A serialisable match: member ids plus the half-open interval.
struct ResultRecord {
    std::vector<std::string> members;
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

std::vector<ResultRecord> to_records(const Dataset& ds, const std::vector<PairMatch>& matches);
std::vector<ResultRecord> to_records(const Dataset& ds, const std::vector<BundleMatch>& matches);

// Deterministic serialisations, sorted by (start, end, members). JSON is an
// array of {"members": [...], "start": s, "end": e}; CSV has the header
// "members,start,end" with members joined by ";".
std::string results_to_json(std::vector<ResultRecord> records);
std::string results_to_csv(std::vector<ResultRecord> records);

// Writes via a temporary file in the same directory followed by a rename, so
// the target path either holds the complete content or is untouched.
void write_text_atomic(const std::string& path, const std::string& content);

void write_results(const std::string& path, std::vector<ResultRecord> records,
                   const std::string& format);

// Wide CSV with a header row and full round-trip precision for values.
void write_dataset_csv(const std::string& path, const Dataset& ds);

}  // namespace tsb
