#ifndef BELLSIM_CLI_HPP
#define BELLSIM_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bellsim::cli {

inline constexpr const char* kVersion = "0.1.0";

// Tolerance of the analytic sweep, pinned to the exactness contract.
inline constexpr double kAnalyticTolerance = 1e-9;

// Agreement tolerance between the closed form and brute-force summation.
inline constexpr double kDjTolerance = 1e-10;

// z-score bound for Monte-Carlo probability estimates.
inline constexpr double kZBound = 4.0;

// False-alarm policy for statistical sweeps: a sweep fails only when
// impossible outcomes occur or when the fraction of tests with p-values
// below `hard_p` exceeds `max_hard_fraction`.
struct SweepPolicy {
    double significance = 1e-3;
    double hard_p = 1e-6;
    double max_hard_fraction = 1e-3;
};

// One machine-readable report per command: metadata, one row per test, and
// a pass/fail summary. Serialization is deterministic, so identical
// invocations produce byte-identical reports.
struct Report {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::vector<std::string> csv_columns;
    nlohmann::json rows = nlohmann::json::array();
    bool pass = false;
    long long failures = 0;

    std::string to_json() const;
    std::string to_csv() const;
};

struct VerifyThm2Params {
    int grid = 32;
    long long samples = 100000;
    std::uint64_t seed = 0;
    std::string mode = "both";  // analytic | montecarlo | both
    double significance = 1e-3;
};

struct VerifyThm3Params {
    int grid = 32;
    long long samples = 100000;
    std::uint64_t seed = 0;
};

struct VerifyThm1Params {
    std::string scenario = "bell";  // bell | dj
    int n = 1;                      // pairs count for dj
    long long samples = 100000;
    std::uint64_t seed = 0;
    double significance = 1e-3;
};

struct DjCheckParams {
    int n = 1;
    long long samples = 1000;  // sampled measurement pairs when n >= 3
    std::uint64_t seed = 0;
};

struct EqReduceParams {
    int n = 2;
    int seeds = 100;           // independent runs per promise pair
    long long samples = 10000;  // sampled pairs when n == 3
    std::uint64_t seed = 0;
};

// Sweeps a grid x grid lattice over measurement angles; analytic mode
// compares the exact theta-average against cos^2((x-y)/2), Monte-Carlo
// mode tests empirical joints with the chi-square criterion.
Report cmd_verify_thm2(const VerifyThm2Params& params);

// Sweeps a two-parameter slice of (x, x', y, y'): the point (i, j) uses
// x = 2*pi*i/g, y = 2*pi*j/g, x' = 2*pi*j/g, y' = 2*pi*i/g, so the
// difference, the sum, and the phase sum all range over the full circle.
Report cmd_verify_thm3(const VerifyThm3Params& params);

// Verifies the index protocol on canonical finite scenarios: the two
// standard real-measurement examples, or the coherent scenario at n <= 2.
Report cmd_verify_thm1(const VerifyThm1Params& params);

// Checks the coherent-measurement correlation laws: the closed-form
// equal-outcome probability against brute-force diagonals, the two promise
// properties, and uniform marginals. Exhaustive for n <= 2.
Report cmd_dj_check(const DjCheckParams& params);

// Runs the restricted-equality wrapper around the index protocol over
// promise pairs and reports correctness and bit usage.
Report cmd_eq_reduce(const EqReduceParams& params);

}  // namespace bellsim::cli

#endif  // BELLSIM_CLI_HPP
