#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curv4/io.hpp"

namespace curv4 {

enum class CheckStatus { Pass, Fail, ReportOnly };

const char* to_string(CheckStatus status);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::optional<double> residual;
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
    double runtime_ms = 0.0;
    std::string detail;   // one-line human summary
    Json payload;         // optional structured extras (null when absent)

    Json to_json() const;
};

// Self-describing verification record: embeds tolerances, seeds, and the
// convention fingerprint so a report is interpretable on its own.
struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    std::string tool_version;

    VerificationReport() = default;
    explicit VerificationReport(std::string suite_name);

    // Pass iff every non-report-only check passes.
    bool overall_pass() const;
    Json to_json() const;
    // Text rendering: one [PASS]/[FAIL]/[REPORT] line per check + summary.
    std::string to_text() const;
};

// The convention choices that fix every sign and factor in the library.
Json conventions_fingerprint();

// Wall-clock helper for filling runtime_ms.
class Stopwatch {
public:
    Stopwatch();
    double elapsed_ms() const;

private:
    std::int64_t start_ns_;
};

} // namespace curv4
