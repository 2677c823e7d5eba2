#pragma once

// Command-line front end: compute, table, verify.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hqc/partitions.hpp"
#include "hqc/rings.hpp"

namespace hqc::cli {

enum class Command { compute, table, verify };
enum class OutputFormat { json, csv };

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitVerification = 3;

struct RunConfig {
    Command command = Command::compute;
    int r = 1;
    int q = 1;
    /// Genus for compute; maximal genus for table.
    int genus = 0;
    std::string mu;
    /// Series truncation order N.
    int order = 30;
    /// Oracle / table bound D on |mu|.
    int max_degree = 6;
    /// Oracle bound M on the number of completed cycles.
    int max_m = 4;
    std::string check = "all";
    OutputFormat out = OutputFormat::json;
    int jobs = 1;
    bool raw = false;
};

/// One Hurwitz value.
struct Record {
    int r = 1;
    int q = 1;
    int g = 0;
    Partition mu;
    int m = 0;
    Rational value;
    friend bool operator==(const Record&, const Record&) = default;
};

nlohmann::json to_json(const Record& rec);
/// Throws std::invalid_argument on a malformed record.
Record record_from_json(const nlohmann::json& j);
std::string csv_header();
std::string to_csv(const Record& rec);

/// Result line of one verification check.
struct CheckResult {
    std::string check;
    int r = 1;
    int q = 1;
    bool passed = true;
    /// First counterexample datum, empty on success.
    nlohmann::json detail;
};

nlohmann::json to_json(const CheckResult& c);

std::vector<Record> table_records(int r, int q, int max_genus, int max_size, int jobs);
std::vector<CheckResult> run_checks(const RunConfig& config);

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hqc::cli
