#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace zarlat {

/// Exit-code contract of the job runner:
///   0  success / checked-true
///   1  checked-false (an honest negative answer: unequal lattice elements,
///      incompatible family, failed suite, ...)
///   2  usage problem (malformed job, parse error, failed precondition)
///   3  internal invariant violation or exhausted resource budget
struct JobResult {
    std::string output;
    int exit_code = 0;
};

struct JobOptions {
    std::optional<std::uint64_t> seed;     // overrides the job's "seed"
    std::optional<std::uint64_t> samples;  // overrides the job's "samples"
    bool verbose_certs = false;
};

/// Execute one job. Output is deterministic for a fixed job: fixed iteration
/// orders everywhere and seeded randomness only (randomized suites demand a
/// seed and refuse to run without one).
JobResult run_command(const nlohmann::json& job, const JobOptions& opts = {});

/// Parse the job text, then run it. JSON syntax errors land on exit code 2.
JobResult run_command_text(const std::string& job_text, const JobOptions& opts = {});

} // namespace zarlat
