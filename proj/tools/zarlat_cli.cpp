// Command-line front end: runs one JSON job per invocation.
//
//   zarlat <command> --job file.json [--seed N] [--samples N] [--verbose-certs]
//
// The command given on the command line must match the job file's "command"
// field (or the field may be omitted, in which case the CLI fills it in).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zarlat/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact Zariski-lattice and structure-sheaf calculator"};
    app.require_subcommand(1);

    std::string job_path;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    bool have_seed = false, have_samples = false, verbose_certs = false;

    const std::vector<std::string> commands = {
        "normalize", "lat-eq",   "lat-leq",       "join",      "meet",
        "support-check", "cover-check", "is-basic", "loc-eq",  "restrict",
        "glue",      "section-eq", "top-roundtrip", "iso-test", "sheaf-test",
        "verify-cert"};

    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--job", job_path, "job file (JSON)")->required();
        sub->add_option("--seed", seed, "seed for randomized suites")
            ->each([&](const std::string&) { have_seed = true; });
        sub->add_option("--samples", samples, "sample count for randomized suites")
            ->each([&](const std::string&) { have_samples = true; });
        sub->add_flag("--verbose-certs", verbose_certs, "print certificates for every step");
    }

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();

    std::ifstream in(job_path);
    if (!in) {
        std::cerr << "error: cannot open job file '" << job_path << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    nlohmann::json job = nlohmann::json::parse(buf.str(), nullptr, false);
    if (job.is_discarded()) {
        std::cerr << "error: job file is not valid JSON\n";
        return 2;
    }
    if (!job.is_object()) {
        std::cerr << "error: job file must hold a JSON object\n";
        return 2;
    }
    if (!job.contains("command")) job["command"] = cmd;
    if (job["command"] != cmd) {
        std::cerr << "error: job file says command '" << job["command"].get<std::string>()
                  << "' but '" << cmd << "' was requested\n";
        return 2;
    }

    zarlat::JobOptions opts;
    if (have_seed) opts.seed = seed;
    if (have_samples) opts.samples = samples;
    opts.verbose_certs = verbose_certs;

    zarlat::JobResult result = zarlat::run_command(job, opts);
    std::cout << result.output;
    return result.exit_code;
}
