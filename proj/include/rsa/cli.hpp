#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rsa::cli {

inline constexpr std::uint64_t default_seed = 20240917;

enum ExitCode : int { Pass = 0, ComparisonFailed = 1, ConfigInvalid = 2, NumericFailure = 3 };

struct ComparisonRow {
    std::string quantity;
    std::optional<double> simulation;
    std::optional<double> sim_stderr;
    std::optional<double> solver;
    std::optional<double> solver_bound;
    std::optional<double> constant;
    std::optional<double> constant_tol;
    double difference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ComparisonReport {
    std::string preset;
    double L = 0.0;
    std::uint64_t replicates = 0;
    std::uint64_t seed = 0;
    std::vector<ComparisonRow> rows;
    bool pass() const;
};

struct CompareOptions {
    std::string preset;
    double L = 200.0;
    std::uint64_t replicates = 100000;
    std::uint64_t seed = default_seed;
    double tolerance_scale = 1.0;
    double fit_L = 2000.0;  // grid length for tail-slope rows
};

ComparisonReport compare(const CompareOptions& opt);
std::string to_csv(const ComparisonReport& r);
nlohmann::json to_json(const ComparisonReport& r);

// 17 significant digits; "NA" for NaN.
std::string format_number(double x);

// Runs the command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsa::cli
