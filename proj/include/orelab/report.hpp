#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orelab {

struct CheckRecord {
    std::string description;
    bool ok = true;
    std::string witness;  // non-empty exactly on failure
};

struct ScenarioReport {
    std::string name;
    std::string status;  // pass | fail | error
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    std::int64_t elapsed_ms = 0;
    std::string error;  // status == error: what went wrong

    bool passed() const { return status == "pass"; }
};

bool operator==(const CheckRecord& a, const CheckRecord& b);
bool operator==(const ScenarioReport& a, const ScenarioReport& b);

enum class ReportFormat { Human, Json };

/// Human format is stable line-oriented text ("PASS <name> (<k> checks, <t> ms)",
/// failures list their witnesses verbatim). Json is a schema-versioned
/// document; with include_timing = false the elapsed fields are omitted so
/// byte-identical documents certify determinism.
std::string emit_report(const std::vector<ScenarioReport>& reports, ReportFormat format,
                        bool include_timing = true);

/// Inverse of emit_report for the Json format.
std::vector<ScenarioReport> parse_report_json(const std::string& text);

/// 0 when everything passed, 1 otherwise.
int report_exit_code(const std::vector<ScenarioReport>& reports);

}  // namespace orelab
