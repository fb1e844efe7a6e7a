#include "tsb/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "json.hpp"

namespace tsb {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

double parse_value(const std::string& field, std::size_t row, std::size_t col) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("csv parse error at row " + std::to_string(row) +
                                    ", column " + std::to_string(col) + ": '" + field +
                                    "' is not a number");
    }
    return v;
}

std::size_t round_half_up(double x) {
    return static_cast<std::size_t>(std::floor(x + 0.5));
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

RawTable parse_csv(std::istream& in) {
    RawTable table;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t row = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (row == 1 && fields.front() == "id") {
            table.has_header = true;
            continue;
        }
        if (fields.size() < 2) {
            throw std::invalid_argument("csv parse error at row " + std::to_string(row) +
                                        ": expected an id followed by at least one value");
        }
        if (fields.front().empty()) {
            throw std::invalid_argument("csv parse error at row " + std::to_string(row) +
                                        ": empty series id");
        }
        if (!seen.insert(fields.front()).second) {
            throw std::invalid_argument("csv parse error at row " + std::to_string(row) +
                                        ": duplicate series id '" + fields.front() + "'");
        }
        if (width == 0) {
            width = fields.size();
        } else if (fields.size() != width) {
            throw std::invalid_argument("csv parse error at row " + std::to_string(row) + ": has " +
                                        std::to_string(fields.size() - 1) + " values, expected " +
                                        std::to_string(width - 1));
        }
        std::vector<double> values;
        values.reserve(fields.size() - 1);
        for (std::size_t c = 1; c < fields.size(); ++c) {
            values.push_back(parse_value(fields[c], row, c + 1));
        }
        table.ids.push_back(fields.front());
        table.rows.push_back(std::move(values));
    }
    if (table.ids.empty()) {
        throw std::invalid_argument("csv parse error: no data rows");
    }
    return table;
}

Dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }
    RawTable table;
    try {
        table = parse_csv(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    std::vector<Series> series;
    series.reserve(table.ids.size());
    for (std::size_t i = 0; i < table.ids.size(); ++i) {
        series.push_back({std::move(table.ids[i]), std::move(table.rows[i])});
    }
    return Dataset(std::move(series));
}

Dataset z_normalize(const Dataset& ds) {
    std::vector<Series> series;
    series.reserve(ds.n());
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto vals = ds.series_values(i);
        std::vector<double> out(vals.begin(), vals.end());
        double mean = 0.0;
        for (double v : out) mean += v;
        mean /= static_cast<double>(out.size());
        double var = 0.0;
        for (double v : out) var += (v - mean) * (v - mean);
        var /= static_cast<double>(out.size());
        double sigma = std::sqrt(var);
        if (sigma == 0.0) {
            std::fill(out.begin(), out.end(), 0.0);
        } else {
            for (double& v : out) v = (v - mean) / sigma;
        }
        series.push_back({ds.id(i), std::move(out)});
    }
    return Dataset(std::move(series));
}

Dataset generate_synthetic(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("generator needs n >= 1 and k >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::size_t width = std::to_string(n - 1).size();
    std::vector<Series> series;
    series.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string num = std::to_string(i);
        std::string id = "S" + std::string(width - num.size(), '0') + num;
        std::vector<double> values(k);
        values[0] = gauss(rng);
        for (std::size_t t = 1; t < k; ++t) {
            values[t] = values[t - 1] + gauss(rng);
        }
        series.push_back({std::move(id), std::move(values)});
    }
    return Dataset(std::move(series));
}

Params resolve_params(const ParamSpec& spec, const Dataset& ds) {
    Params p;

    if (spec.epsilon.percent) {
        p.epsilon = spec.epsilon.value / 100.0 * ds.value_range();
    } else {
        p.epsilon = spec.epsilon.value;
    }
    if (!std::isfinite(p.epsilon) || p.epsilon <= 0.0) {
        throw std::invalid_argument("epsilon must resolve to a positive value, got " +
                                    std::to_string(p.epsilon));
    }

    if (spec.delta.percent) {
        std::size_t d = round_half_up(spec.delta.value / 100.0 * static_cast<double>(ds.k()));
        p.delta = std::max<std::size_t>(d, 2);
    } else {
        double d = spec.delta.value;
        if (d != std::floor(d) || d < 2.0) {
            throw std::invalid_argument("delta must be an integer >= 2");
        }
        p.delta = static_cast<std::size_t>(d);
    }
    if (p.delta > ds.k()) {
        throw std::invalid_argument("delta " + std::to_string(p.delta) +
                                    " exceeds the series length " + std::to_string(ds.k()));
    }

    if (spec.mu) {
        if (spec.mu->percent) {
            std::size_t m = round_half_up(spec.mu->value / 100.0 * static_cast<double>(ds.n()));
            p.mu = std::max<std::size_t>(m, 3);
        } else {
            double m = spec.mu->value;
            if (m != std::floor(m) || m < 3.0) {
                throw std::invalid_argument("mu must be an integer >= 3");
            }
            p.mu = static_cast<std::size_t>(m);
        }
    }

    return p;
}

namespace {

std::vector<std::string> member_ids(const Dataset& ds, std::span<const std::size_t> members) {
    std::vector<std::string> ids;
    ids.reserve(members.size());
    for (std::size_t m : members) ids.push_back(ds.id(m));
    std::sort(ids.begin(), ids.end());
    return ids;
}

void sort_records(std::vector<ResultRecord>& records) {
    std::sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
        if (a.start != b.start) return a.start < b.start;
        if (a.end != b.end) return a.end < b.end;
        return a.members < b.members;
    });
}

}  // namespace

std::vector<ResultRecord> to_records(const Dataset& ds, const std::vector<PairMatch>& matches) {
    std::vector<ResultRecord> records;
    records.reserve(matches.size());
    for (const auto& m : matches) {
        std::size_t pair[] = {m.a, m.b};
        records.push_back({member_ids(ds, pair), m.interval.start, m.interval.end});
    }
    return records;
}

std::vector<ResultRecord> to_records(const Dataset& ds, const std::vector<BundleMatch>& matches) {
    std::vector<ResultRecord> records;
    records.reserve(matches.size());
    for (const auto& m : matches) {
        records.push_back({member_ids(ds, m.members), m.interval.start, m.interval.end});
    }
    return records;
}

std::string results_to_json(std::vector<ResultRecord> records) {
    sort_records(records);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json obj;
        obj["members"] = r.members;
        obj["start"] = r.start;
        obj["end"] = r.end;
        arr.push_back(std::move(obj));
    }
    return arr.dump() + "\n";
}

std::string results_to_csv(std::vector<ResultRecord> records) {
    sort_records(records);
    std::string out = "members,start,end\n";
    for (const auto& r : records) {
        for (std::size_t i = 0; i < r.members.size(); ++i) {
            if (i > 0) out += ';';
            out += r.members[i];
        }
        out += ',';
        out += std::to_string(r.start);
        out += ',';
        out += std::to_string(r.end);
        out += '\n';
    }
    return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open output file '" + tmp.string() + "'");
        }
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("failed writing output file '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot move output into place at '" + path + "'");
    }
}

void write_results(const std::string& path, std::vector<ResultRecord> records,
                   const std::string& format) {
    std::string content;
    if (format == "json") {
        content = results_to_json(std::move(records));
    } else if (format == "csv") {
        content = results_to_csv(std::move(records));
    } else {
        throw std::invalid_argument("unknown output format '" + format + "'");
    }
    write_text_atomic(path, content);
}

void write_dataset_csv(const std::string& path, const Dataset& ds) {
    std::string content = "id";
    for (std::size_t t = 0; t < ds.k(); ++t) {
        content += ",t" + std::to_string(t);
    }
    content += '\n';
    for (std::size_t i = 0; i < ds.n(); ++i) {
        content += ds.id(i);
        for (double v : ds.series_values(i)) {
            content += ',';
            content += format_value(v);
        }
        content += '\n';
    }
    write_text_atomic(path, content);
}

}  // namespace tsb
