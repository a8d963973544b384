#pragma once

#include "orelab/maps.hpp"
#include "orelab/ring_spec.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orelab {

struct Bounds {
    int degree = 512;  // quasi-inverse degree bound
    int terms = 64;    // Neumann term bound
    int samples = 0;   // overrides a scenario's sampling default when > 0
};

/// One validated scenario: a ring, its maps, an optional q, a scenario kind
/// with kind-specific parameters, a seed, and bounds.
struct ScenarioConfig {
    std::string name;
    RingSpec ring;
    AutomorphismSpec sigma;
    DerivationSpec deriv;
    std::optional<std::string> q;  // scalar literal, JSON text
    std::string kind;
    nlohmann::json params;  // kind-specific, already validated
    std::uint64_t seed = 0;
    Bounds bounds;
};

struct ParseError {
    std::string path;  // JSON-pointer-style, e.g. $.scenarios[0].ring
    std::string message;
};

struct ParseResult {
    std::vector<ScenarioConfig> scenarios;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

extern const char* const kScenarioKinds[10];

/// Parses and validates a configuration document. Structural validation is
/// full: unknown fields are rejected, ring parameters are checked by actually
/// building the ring, map actions must fit the ring, q must parse to a unit,
/// and every scenario kind validates its required parameters. Map axiom
/// verification happens at run time, not here.
ParseResult parse_config(const std::string& text,
                         std::optional<std::uint64_t> default_seed = std::nullopt);

/// Ring spec from its JSON form (the `ring` object of a scenario).
RingSpec ring_spec_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json ring_spec_to_json(const RingSpec& spec);

}  // namespace orelab
