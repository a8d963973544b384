#include "orelab/cli.hpp"

#include "orelab/config.hpp"
#include "orelab/element_io.hpp"
#include "orelab/error.hpp"
#include "orelab/ideal.hpp"
#include "orelab/report.hpp"
#include "orelab/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace orelab {

namespace {

constexpr int kExitConfigError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<std::uint64_t> env_seed() {
    const char* v = std::getenv("ORELAB_SEED");
    if (v == nullptr || *v == '\0') return std::nullopt;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw ConfigError(std::string("ORELAB_SEED is not an integer: ") + v);
    }
}

void print_parse_errors(const ParseResult& parsed, std::ostream& err) {
    for (const auto& e : parsed.errors) {
        err << "config error at " << e.path << ": " << e.message << '\n';
    }
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed, int jobs,
            const std::string& format, std::ostream& out, std::ostream& err) {
    const ParseResult parsed = parse_config(read_file(config_path), seed);
    if (!parsed.ok()) {
        print_parse_errors(parsed, err);
        return kExitConfigError;
    }
    const auto reports = run_scenarios(parsed.scenarios, jobs);
    out << emit_report(reports,
                       format == "json" ? ReportFormat::Json : ReportFormat::Human);
    return report_exit_code(reports);
}

int cmd_check_maps(const std::string& config_path, std::optional<std::uint64_t> seed,
                   std::ostream& out, std::ostream& err) {
    const ParseResult parsed = parse_config(read_file(config_path), seed);
    if (!parsed.ok()) {
        print_parse_errors(parsed, err);
        return kExitConfigError;
    }
    std::vector<ScenarioReport> reports;
    reports.reserve(parsed.scenarios.size());
    for (const auto& cfg : parsed.scenarios) reports.push_back(run_map_checks(cfg));
    out << emit_report(reports, ReportFormat::Human);
    return report_exit_code(reports);
}

int cmd_oracle(const std::string& spec_arg, const std::string& format, std::ostream& out) {
    std::string text = spec_arg;
    if (std::filesystem::exists(spec_arg)) text = read_file(spec_arg);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid ring spec: ") + e.what());
    }
    const RingSpec spec = ring_spec_from_json(j, "$");
    const RingPtr ring = make_ring(spec);
    if (!ring->is_enumerable()) {
        throw ConfigError(ring->describe() + " is not enumerable; the oracles need |R| <= " +
                          std::to_string(kEnumerationCutoff));
    }

    const Ideal J = jacobson_radical(ring);
    const Ideal N = nilradical(ring);
    const auto Z = center(ring);

    if (format == "json") {
        nlohmann::json doc;
        doc["schema_version"] = 1;
        doc["ring"] = ring_spec_to_json(spec);
        doc["size"] = *ring->size();
        doc["characteristic"] = ring->characteristic();
        auto dump_set = [](const std::vector<RingElement>& v) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& e : v) arr.push_back(element_to_json(e));
            return arr;
        };
        doc["jacobson_radical"] = dump_set(J.elements());
        doc["nilradical"] = dump_set(N.elements());
        doc["center"] = dump_set(Z);
        out << doc.dump(2) << '\n';
    } else {
        out << "ring: " << ring->describe() << " (" << *ring->size()
            << " elements, characteristic " << ring->characteristic() << ")\n";
        out << "jacobson radical: " << J.format() << '\n';
        out << "nilradical:       " << N.format() << '\n';
        std::ostringstream zs;
        zs << '{';
        for (std::size_t i = 0; i < Z.size(); ++i) {
            if (i) zs << ", ";
            zs << ring->format(Z[i]);
        }
        zs << '}';
        out << "center:           " << zs.str() << '\n';
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orelab: exact verification kernel for skew polynomial rings R[x; sigma, D]"};
    app.require_subcommand(1);

    std::string config_path;
    std::string ring_spec;
    std::string format = "human";
    std::optional<std::uint64_t> seed;
    int jobs = 1;

    auto* run = app.add_subcommand("run", "run the scenarios of a config file");
    run->add_option("config", config_path, "scenario configuration (JSON)")->required();
    run->add_option("--seed", seed, "default seed for scenarios without one");
    run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    run->add_option("--format", format, "human | json")
        ->check(CLI::IsMember({"human", "json"}));

    auto* check = app.add_subcommand("check-maps", "verify the map axioms of each scenario");
    check->add_option("config", config_path, "scenario configuration (JSON)")->required();
    check->add_option("--seed", seed, "default seed for scenarios without one");

    auto* oracle =
        app.add_subcommand("oracle", "print J, N and the center of a finite ring");
    oracle->add_option("ring", ring_spec, "ring spec: inline JSON or a file")->required();
    oracle->add_option("--format", format, "human | json")
        ->check(CLI::IsMember({"human", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "argument error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        if (!seed) seed = env_seed();
        if (run->parsed()) return cmd_run(config_path, seed, jobs, format, out, err);
        if (check->parsed()) return cmd_check_maps(config_path, seed, out, err);
        if (oracle->parsed()) return cmd_oracle(ring_spec, format, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const UnsupportedOperation& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return kExitConfigError;
}

}  // namespace orelab
