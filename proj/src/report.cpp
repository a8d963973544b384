#include "orelab/report.hpp"

#include "orelab/error.hpp"

#include <json.hpp>

#include <sstream>

namespace orelab {

using nlohmann::json;

bool operator==(const CheckRecord& a, const CheckRecord& b) {
    return a.description == b.description && a.ok == b.ok && a.witness == b.witness;
}

bool operator==(const ScenarioReport& a, const ScenarioReport& b) {
    return a.name == b.name && a.status == b.status && a.seed == b.seed &&
           a.checks == b.checks && a.elapsed_ms == b.elapsed_ms && a.error == b.error;
}

std::string emit_report(const std::vector<ScenarioReport>& reports, ReportFormat format,
                        bool include_timing) {
    if (format == ReportFormat::Human) {
        std::ostringstream out;
        for (const auto& r : reports) {
            if (r.status == "error") {
                out << "ERROR " << r.name << ": " << r.error << '\n';
                continue;
            }
            out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks.size()
                << " checks";
            if (include_timing) out << ", " << r.elapsed_ms << " ms";
            out << ")\n";
            if (!r.passed()) {
                for (const auto& c : r.checks) {
                    if (c.ok) continue;
                    out << "  FAIL " << c.description;
                    if (!c.witness.empty()) out << ": " << c.witness;
                    out << '\n';
                }
            }
        }
        return out.str();
    }

    json doc;
    doc["schema_version"] = 1;
    json arr = json::array();
    for (const auto& r : reports) {
        json jr;
        jr["name"] = r.name;
        jr["status"] = r.status;
        jr["seed"] = r.seed;
        if (include_timing) jr["elapsed_ms"] = r.elapsed_ms;
        if (!r.error.empty()) jr["error"] = r.error;
        json checks = json::array();
        for (const auto& c : r.checks) {
            json jc;
            jc["description"] = c.description;
            jc["status"] = c.ok ? "pass" : "fail";
            if (!c.witness.empty()) jc["witness"] = c.witness;
            checks.push_back(std::move(jc));
        }
        jr["checks"] = std::move(checks);
        arr.push_back(std::move(jr));
    }
    doc["reports"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::vector<ScenarioReport> parse_report_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid report JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("schema_version") ||
        doc.at("schema_version").get<int>() != 1 || !doc.contains("reports")) {
        throw ConfigError("unrecognized report document");
    }
    std::vector<ScenarioReport> out;
    for (const auto& jr : doc.at("reports")) {
        ScenarioReport r;
        r.name = jr.at("name").get<std::string>();
        r.status = jr.at("status").get<std::string>();
        r.seed = jr.at("seed").get<std::uint64_t>();
        if (jr.contains("elapsed_ms")) r.elapsed_ms = jr.at("elapsed_ms").get<std::int64_t>();
        if (jr.contains("error")) r.error = jr.at("error").get<std::string>();
        for (const auto& jc : jr.at("checks")) {
            CheckRecord c;
            c.description = jc.at("description").get<std::string>();
            c.ok = jc.at("status").get<std::string>() == "pass";
            if (jc.contains("witness")) c.witness = jc.at("witness").get<std::string>();
            r.checks.push_back(std::move(c));
        }
        out.push_back(std::move(r));
    }
    return out;
}

int report_exit_code(const std::vector<ScenarioReport>& reports) {
    for (const auto& r : reports) {
        if (!r.passed()) return 1;
    }
    return 0;
}

}  // namespace orelab
