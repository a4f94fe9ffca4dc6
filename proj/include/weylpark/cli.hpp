#pragma once

#include "weylpark/combinatorics.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylpark::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

// Raised for malformed or inconsistent arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dominant weight xi = lambda + s*tau, normalized so that lambda_r = 0.
struct Highest {
    combinatorics::WeightVector xi;  // full r-vector
    combinatorics::Partition lambda;
    int shift = 0;                   // s
};

// "2,0" -> {2, 0}; throws UsageError on junk.
std::vector<int> parse_int_list(const std::string& text);

// From --xi (padded with zeros to r) or --signature/--s. Requires a weakly
// decreasing vector with at most r entries.
Highest normalize_weight(const std::optional<std::string>& xi, const std::optional<std::string>& signature, int s,
                         int r);

// Worker count: explicit value if > 0, else WEYLPARK_JOBS, else 1.
int resolve_jobs(int requested);

// Runs `weylpark <args...>`; output goes to out (or --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace weylpark::cli
