// Command-line front end: expand / reconstruct / forward / roundtrip /
// hankel / bench-conditioning / gen over the JSON wire formats.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "stieltjes/cli.hpp"

namespace {

struct Options {
    std::string input;
    std::string output;
    std::optional<int> order;
    std::optional<std::uint64_t> seed;
    std::optional<int> count;
    std::string family;
};

void add_common_flags(CLI::App* cmd, Options& opt, bool with_input) {
    if (with_input) cmd->add_option("--input", opt.input, "input JSON file");
    cmd->add_option("--output", opt.output, "output JSON file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Stieltjes-type continued fraction and string reconstruction"};
    app.require_subcommand(1);

    Options opt;
    int order = -1;
    std::uint64_t seed = 0;
    int count = 0;

    auto* expand = app.add_subcommand("expand", "measure -> continued fraction");
    add_common_flags(expand, opt, true);
    expand->add_option("--order", order, "moment order K (default: raise until terminated)");

    auto* reconstruct = app.add_subcommand("reconstruct", "moments -> string data");
    add_common_flags(reconstruct, opt, true);

    auto* forward = app.add_subcommand("forward", "string data -> Weyl function");
    add_common_flags(forward, opt, true);

    auto* roundtrip = app.add_subcommand("roundtrip", "verify exact round trips");
    add_common_flags(roundtrip, opt, true);
    roundtrip->add_option("--seed", seed, "generator seed (default 0)");
    roundtrip->add_option("--count", count, "number of generated instances");

    auto* hankel = app.add_subcommand("hankel", "moments or measure -> determinant table");
    add_common_flags(hankel, opt, true);
    hankel->add_option("--order", order, "moment order K for measure input");

    auto* bench = app.add_subcommand("bench-conditioning", "exact vs float determinant report");
    add_common_flags(bench, opt, false);
    bench->add_option("--order", order, "largest determinant size K (default 12)");
    bench->add_option("--family", opt.family, "moment family: hilbert|random (default hilbert)");
    bench->add_option("--seed", seed, "seed for the random family");

    auto* gen = app.add_subcommand("gen", "emit seeded random instances");
    add_common_flags(gen, opt, false);
    gen->add_option("--family", opt.family, "instance kind: measure|string (default measure)");
    gen->add_option("--seed", seed, "generator seed (default 0)");
    gen->add_option("--count", count, "number of instances (default 1)");
    gen->add_option("--order", order, "max points / max interior weights (default 6)");

    CLI11_PARSE(app, argc, argv);

    stieltjes::cli::JobSpec job;
    job.input_path = opt.input;
    job.output_path = opt.output;
    job.family = opt.family;
    if (order >= 0) job.order = order;
    if (count > 0) job.count = count;

    if (expand->parsed()) job.command = stieltjes::cli::Command::expand;
    if (reconstruct->parsed()) job.command = stieltjes::cli::Command::reconstruct;
    if (forward->parsed()) job.command = stieltjes::cli::Command::forward;
    if (roundtrip->parsed()) {
        job.command = stieltjes::cli::Command::roundtrip;
        if (roundtrip->count("--seed") > 0) job.seed = seed;
    }
    if (hankel->parsed()) job.command = stieltjes::cli::Command::hankel;
    if (bench->parsed()) {
        job.command = stieltjes::cli::Command::bench_conditioning;
        if (bench->count("--seed") > 0) job.seed = seed;
    }
    if (gen->parsed()) {
        job.command = stieltjes::cli::Command::gen;
        if (gen->count("--seed") > 0) job.seed = seed;
    }

    return stieltjes::cli::run(job, std::cout, std::cerr);
}
