#include "tsb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "tsb/checkpoint.hpp"
#include "tsb/sweep.hpp"

namespace tsb {

namespace {

double wall_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t m = xs.size() / 2;
    if (xs.size() % 2 == 1) return xs[m];
    return 0.5 * (xs[m - 1] + xs[m]);
}

double timed_reps(int repetitions, const std::function<void()>& fn) {
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(repetitions));
    for (int r = 0; r < repetitions; ++r) times.push_back(wall_ms(fn));
    return median(times);
}

std::string record_to_string(const ResultRecord& r) {
    std::string s = "{members=[";
    for (std::size_t i = 0; i < r.members.size(); ++i) {
        if (i > 0) s += ';';
        s += r.members[i];
    }
    s += "], start=" + std::to_string(r.start) + ", end=" + std::to_string(r.end) + "}";
    return s;
}

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

Dataset load_input(const RunConfig& cfg) {
    if (cfg.input.empty()) {
        throw std::invalid_argument("--input is required for " + cfg.command);
    }
    Dataset ds = load_csv(cfg.input);
    if (cfg.znormalize) ds = z_normalize(ds);
    return ds;
}

ParamSpec make_spec(const RunConfig& cfg, bool need_mu) {
    if (!cfg.epsilon) throw std::invalid_argument("--epsilon is required for " + cfg.command);
    if (!cfg.delta) throw std::invalid_argument("--delta is required for " + cfg.command);
    if (need_mu && !cfg.mu) throw std::invalid_argument("--mu is required for " + cfg.command);
    ParamSpec spec;
    spec.epsilon = *cfg.epsilon;
    spec.delta = *cfg.delta;
    spec.mu = cfg.mu;
    return spec;
}

void emit(const RunConfig& cfg, std::vector<ResultRecord> records) {
    if (cfg.output.empty()) {
        std::cout << (cfg.format == "csv" ? results_to_csv(std::move(records))
                                          : results_to_json(std::move(records)));
    } else {
        write_results(cfg.output, std::move(records), cfg.format);
    }
}

}  // namespace

ParamField parse_value_spec(const std::string& text) {
    std::string body = text;
    ParamField field;
    if (!body.empty() && body.back() == '%') {
        field.percent = true;
        body.pop_back();
    }
    const char* first = body.data();
    const char* last = body.data() + body.size();
    auto [ptr, ec] = std::from_chars(first, last, field.value);
    if (body.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("cannot parse parameter value '" + text +
                                    "' (expected a number or a number followed by %)");
    }
    return field;
}

std::optional<std::string> find_result_mismatch(std::vector<ResultRecord> a,
                                                std::vector<ResultRecord> b) {
    auto key = [](const ResultRecord& r) { return std::tie(r.start, r.end, r.members); };
    auto less = [&](const ResultRecord& x, const ResultRecord& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    if (a == b) return std::nullopt;
    std::string head = "sweepline produced " + std::to_string(a.size()) +
                       " matches, checkpoint produced " + std::to_string(b.size()) + "; ";
    for (const auto& r : a) {
        if (!std::binary_search(b.begin(), b.end(), r, less)) {
            return head + "sweepline-only match " + record_to_string(r);
        }
    }
    for (const auto& r : b) {
        if (!std::binary_search(a.begin(), a.end(), r, less)) {
            return head + "checkpoint-only match " + record_to_string(r);
        }
    }
    return head + "sets differ only in multiplicity";
}

BenchTimings benchmark_pairs(const Dataset& ds, const Params& p, int repetitions) {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    std::vector<PairMatch> sl, cp;
    BenchTimings out;
    out.sweepline_ms = timed_reps(repetitions, [&] { sl = discover_pairs_sweepline(ds, p); });
    out.checkpoint_ms = timed_reps(repetitions, [&] { cp = discover_pairs_checkpoint(ds, p); });
    if (auto diff = find_result_mismatch(to_records(ds, sl), to_records(ds, cp))) {
        throw std::runtime_error("pair results differ between algorithms: " + *diff);
    }
    out.matches = sl.size();
    return out;
}

BenchTimings benchmark_bundles(const Dataset& ds, const Params& p, int repetitions) {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    std::vector<BundleMatch> sl, cp;
    BenchTimings out;
    out.sweepline_ms = timed_reps(repetitions, [&] { sl = discover_bundles_sweepline(ds, p); });
    out.checkpoint_ms = timed_reps(repetitions, [&] { cp = discover_bundles_checkpoint(ds, p); });
    if (auto diff = find_result_mismatch(to_records(ds, sl), to_records(ds, cp))) {
        throw std::runtime_error("bundle results differ between algorithms: " + *diff);
    }
    out.matches = sl.size();
    return out;
}

int run_pairs(const RunConfig& cfg) {
    Dataset ds = load_input(cfg);
    Params p = resolve_params(make_spec(cfg, false), ds);
    std::vector<PairMatch> matches;
    double ms = wall_ms([&] {
        matches = cfg.algorithm == "sweepline" ? discover_pairs_sweepline(ds, p)
                                               : discover_pairs_checkpoint(ds, p);
    });
    std::size_t count = matches.size();
    emit(cfg, to_records(ds, matches));
    std::cerr << "pairs: n=" << ds.n() << " k=" << ds.k() << " epsilon=" << format_short(p.epsilon)
              << " delta=" << p.delta << " algorithm=" << cfg.algorithm << " matches=" << count
              << " time_ms=" << format_short(ms) << "\n";
    return 0;
}

int run_bundles(const RunConfig& cfg) {
    Dataset ds = load_input(cfg);
    Params p = resolve_params(make_spec(cfg, true), ds);
    std::vector<BundleMatch> matches;
    double ms = wall_ms([&] {
        matches = cfg.algorithm == "sweepline" ? discover_bundles_sweepline(ds, p)
                                               : discover_bundles_checkpoint(ds, p);
    });
    std::size_t count = matches.size();
    emit(cfg, to_records(ds, matches));
    std::cerr << "bundles: n=" << ds.n() << " k=" << ds.k() << " epsilon=" << format_short(p.epsilon)
              << " delta=" << p.delta << " mu=" << p.mu << " algorithm=" << cfg.algorithm
              << " matches=" << count << " time_ms=" << format_short(ms) << "\n";
    return 0;
}

int run_generate(const RunConfig& cfg) {
    if (cfg.output.empty()) throw std::invalid_argument("--output is required for generate");
    if (cfg.gen_n == 0 || cfg.gen_k == 0) {
        throw std::invalid_argument("--n and --k are required for generate");
    }
    Dataset ds = generate_synthetic(cfg.gen_n, cfg.gen_k, cfg.seed);
    write_dataset_csv(cfg.output, ds);
    std::cerr << "generate: n=" << ds.n() << " k=" << ds.k() << " seed=" << cfg.seed << " -> "
              << cfg.output << "\n";
    return 0;
}

int run_benchmark(const RunConfig& cfg) {
    Dataset ds = load_input(cfg);
    Params p = resolve_params(make_spec(cfg, false), ds);

    nlohmann::ordered_json report;
    report["n"] = ds.n();
    report["k"] = ds.k();
    report["epsilon"] = p.epsilon;
    report["delta"] = p.delta;
    if (cfg.mu) report["mu"] = p.mu;
    report["repetitions"] = cfg.repetitions;

    auto section = [](const BenchTimings& b) {
        nlohmann::ordered_json s;
        s["sweepline_ms"] = b.sweepline_ms;
        s["checkpoint_ms"] = b.checkpoint_ms;
        s["speedup"] = b.checkpoint_ms > 0.0 ? b.sweepline_ms / b.checkpoint_ms : 0.0;
        s["matches"] = b.matches;
        return s;
    };

    report["pairs"] = section(benchmark_pairs(ds, p, cfg.repetitions));
    if (cfg.mu) {
        report["bundles"] = section(benchmark_bundles(ds, p, cfg.repetitions));
    }

    std::cout << report.dump(2) << "\n";
    return 0;
}

int run(const RunConfig& cfg) {
    try {
        if (cfg.command == "pairs") return run_pairs(cfg);
        if (cfg.command == "bundles") return run_bundles(cfg);
        if (cfg.command == "generate") return run_generate(cfg);
        if (cfg.command == "benchmark") return run_benchmark(cfg);
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tsb
