#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "tsb/cli.hpp"

namespace {

struct RawArgs {
    std::string epsilon, delta, mu;
};

void add_shared(CLI::App* cmd, tsb::RunConfig& cfg, RawArgs& raw, bool need_mu) {
    cmd->add_option("--input", cfg.input, "input CSV (one row per series: id,v0,v1,...)")
        ->required();
    cmd->add_option("--output", cfg.output, "output path (default: standard output)");
    cmd->add_option("--epsilon", raw.epsilon, "value closeness threshold, absolute or % of range")
        ->required();
    cmd->add_option("--delta", raw.delta, "minimum duration in timestamps, absolute or % of k")
        ->required();
    auto* mu = cmd->add_option("--mu", raw.mu, "minimum members, absolute or % of n");
    if (need_mu) mu->required();
    cmd->add_flag("--znormalize", cfg.znormalize, "z-normalize each series before discovery");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discover locally similar pairs and bundles in co-evolving time series"};
    app.require_subcommand(1);

    tsb::RunConfig cfg;
    RawArgs raw;

    auto* pairs = app.add_subcommand("pairs", "find maximal locally similar pairs");
    add_shared(pairs, cfg, raw, false);
    pairs->add_option("--algorithm", cfg.algorithm, "sweepline or checkpoint")
        ->check(CLI::IsMember({"sweepline", "checkpoint"}));
    pairs->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* bundles = app.add_subcommand("bundles", "find maximal bundles of similar series");
    add_shared(bundles, cfg, raw, true);
    bundles->add_option("--algorithm", cfg.algorithm, "sweepline or checkpoint")
        ->check(CLI::IsMember({"sweepline", "checkpoint"}));
    bundles->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* generate = app.add_subcommand("generate", "write a seeded random-walk dataset");
    generate->add_option("--n", cfg.gen_n, "number of series")->required();
    generate->add_option("--k", cfg.gen_k, "number of timestamps")->required();
    generate->add_option("--seed", cfg.seed, "random seed");
    generate->add_option("--output", cfg.output, "output CSV path")->required();

    auto* benchmark = app.add_subcommand("benchmark", "time both algorithms and compare results");
    add_shared(benchmark, cfg, raw, false);
    benchmark->add_option("--reps", cfg.repetitions, "timing repetitions (median is reported)")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (!raw.epsilon.empty()) cfg.epsilon = tsb::parse_value_spec(raw.epsilon);
        if (!raw.delta.empty()) cfg.delta = tsb::parse_value_spec(raw.delta);
        if (!raw.mu.empty()) cfg.mu = tsb::parse_value_spec(raw.mu);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return tsb::run(cfg);
}
