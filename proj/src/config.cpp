#include "orelab/config.hpp"

#include "orelab/element_io.hpp"
#include "orelab/error.hpp"
#include "orelab/ring.hpp"

#include <set>

namespace orelab {

using nlohmann::json;

const char* const kScenarioKinds[10] = {
    "axioms",      "qleibniz",  "associativity", "sigma-star", "char-p-commutation",
    "geometric-qi", "thm31",    "example35",     "iset",       "radical-oracle",
};

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError(path + ": " + message);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key)) fail(path + "." + key, "unknown field");
    }
}

std::uint64_t require_uint(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        fail(path + "." + key, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

int optional_int(const json& obj, const char* key, int fallback, const std::string& path,
                 int min_value = 0) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    const int out = v.get<int>();
    if (out < min_value) {
        fail(path + "." + key, "must be >= " + std::to_string(min_value));
    }
    return out;
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
    if (!obj.at(key).is_string()) fail(path + "." + key, "expected a string");
    return obj.at(key).get<std::string>();
}

AutomorphismSpec sigma_spec_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    reject_unknown_keys(j, {"action", "factor", "inner"}, path);
    const std::string action = require_string(j, "action", path);
    if (action == "identity") return AutomorphismSpec::identity();
    if (action == "scale_y") {
        if (!j.contains("factor")) fail(path, "scale_y needs a \"factor\"");
        return AutomorphismSpec::scale_y(j.at("factor").dump());
    }
    if (action == "frobenius") return AutomorphismSpec::frobenius();
    if (action == "shift") return AutomorphismSpec::shift();
    if (action == "entrywise") {
        if (!j.contains("inner")) fail(path, "entrywise needs an \"inner\" action");
        return AutomorphismSpec::entrywise(sigma_spec_from_json(j.at("inner"), path + ".inner"));
    }
    if (action == "dorroh_lift") {
        if (!j.contains("inner")) fail(path, "dorroh_lift needs an \"inner\" action");
        return AutomorphismSpec::dorroh_lift(
            sigma_spec_from_json(j.at("inner"), path + ".inner"));
    }
    fail(path + ".action", "unknown automorphism action \"" + action + "\"");
}

DerivationSpec deriv_spec_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    reject_unknown_keys(j, {"action", "inner"}, path);
    const std::string action = require_string(j, "action", path);
    if (action == "zero") return DerivationSpec::zero();
    if (action == "d_dy") return DerivationSpec::d_dy();
    if (action == "q_difference") return DerivationSpec::q_difference();
    if (action == "dorroh_lift") {
        if (!j.contains("inner")) fail(path, "dorroh_lift needs an \"inner\" action");
        return DerivationSpec::dorroh_lift(
            deriv_spec_from_json(j.at("inner"), path + ".inner"));
    }
    fail(path + ".action", "unknown derivation action \"" + action + "\"");
}

void validate_scenario_params(const std::string& kind, const json& p, const RingPtr& ring,
                              const std::string& path) {
    const auto payload = [&](const char* key) {
        if (!p.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
        try {
            element_from_json(ring, p.at(key));
        } catch (const ConfigError& e) {
            fail(path + "." + key, e.what());
        }
    };

    if (kind == "axioms") {
        reject_unknown_keys(p, {"kind", "triples"}, path);
        optional_int(p, "triples", 200, path, 1);
    } else if (kind == "qleibniz") {
        reject_unknown_keys(p, {"kind", "max_k", "samples"}, path);
        optional_int(p, "max_k", 10, path, 0);
        optional_int(p, "samples", 100, path, 1);
    } else if (kind == "associativity") {
        reject_unknown_keys(p, {"kind", "triples", "max_deg"}, path);
        optional_int(p, "triples", 500, path, 1);
        optional_int(p, "max_deg", 4, path, 0);
    } else if (kind == "sigma-star") {
        reject_unknown_keys(p, {"kind", "pairs", "max_deg"}, path);
        optional_int(p, "pairs", 200, path, 1);
        optional_int(p, "max_deg", 4, path, 0);
    } else if (kind == "char-p-commutation") {
        reject_unknown_keys(p, {"kind", "m", "samples"}, path);
        if (!p.contains("m")) fail(path, "missing field \"m\"");
        optional_int(p, "m", 1, path, 1);
        optional_int(p, "samples", 200, path, 1);
    } else if (kind == "geometric-qi") {
        reject_unknown_keys(p, {"kind", "a", "k"}, path);
        payload("a");
        if (!p.contains("k")) fail(path, "missing field \"k\"");
        optional_int(p, "k", 0, path, 0);
    } else if (kind == "thm31") {
        reject_unknown_keys(p, {"kind", "a", "n", "exhaustive_fallback"}, path);
        payload("a");
        if (!p.contains("n")) fail(path, "missing field \"n\"");
        optional_int(p, "n", 1, path, 1);
        if (p.contains("exhaustive_fallback") && !p.at("exhaustive_fallback").is_boolean()) {
            fail(path + ".exhaustive_fallback", "expected a boolean");
        }
    } else if (kind == "example35") {
        reject_unknown_keys(p, {"kind", "widths", "tuples", "witness_width", "witness_factors"},
                            path);
        if (p.contains("witness_factors")) {
            if (!p.at("witness_factors").is_array()) {
                fail(path + ".witness_factors", "expected an array of polynomial literals");
            }
            for (const auto& poly : p.at("witness_factors")) {
                if (!poly.is_array()) {
                    fail(path + ".witness_factors", "each factor is a coefficient array");
                }
                for (const auto& c : poly) {
                    try {
                        element_from_json(ring, c);
                    } catch (const ConfigError& e) {
                        fail(path + ".witness_factors", e.what());
                    }
                }
            }
        }
        if (p.contains("widths")) {
            if (!p.at("widths").is_array() || p.at("widths").empty()) {
                fail(path + ".widths", "expected a non-empty array of widths");
            }
            for (const auto& w : p.at("widths")) {
                if (!w.is_number_integer() || w.get<int>() < 1) {
                    fail(path + ".widths", "widths must be integers >= 1");
                }
            }
        }
        optional_int(p, "tuples", 100, path, 1);
        optional_int(p, "witness_width", 0, path, 0);
        if (ring->kind() != RingKind::DirectSumShift) {
            fail(path, "example35 needs a DirectSumShift ring");
        }
    } else if (kind == "iset") {
        reject_unknown_keys(p, {"kind", "samples", "expected", "expect_all"}, path);
        optional_int(p, "samples", 32, path, 1);
        if (p.contains("expected")) {
            if (!p.at("expected").is_array()) fail(path + ".expected", "expected an array");
            for (const auto& e : p.at("expected")) {
                try {
                    element_from_json(ring, e);
                } catch (const ConfigError& err) {
                    fail(path + ".expected", err.what());
                }
            }
        }
        if (p.contains("expect_all") && !p.at("expect_all").is_boolean()) {
            fail(path + ".expect_all", "expected a boolean");
        }
    } else if (kind == "radical-oracle") {
        reject_unknown_keys(
            p, {"kind", "expected_jacobson", "expected_nilradical", "expected_center"}, path);
        for (const char* key : {"expected_jacobson", "expected_nilradical", "expected_center"}) {
            if (!p.contains(key)) continue;
            if (!p.at(key).is_array()) fail(path + "." + key, "expected an array");
            for (const auto& e : p.at(key)) {
                try {
                    element_from_json(ring, e);
                } catch (const ConfigError& err) {
                    fail(path + "." + key, err.what());
                }
            }
        }
        if (!ring->is_enumerable()) {
            fail(path, "radical-oracle needs an enumerable ring, got " + ring->describe());
        }
    } else {
        std::string known;
        for (const char* k : kScenarioKinds) {
            if (!known.empty()) known += ", ";
            known += k;
        }
        fail(path + ".kind", "unknown scenario kind \"" + kind + "\" (known: " + known + ")");
    }
}

}  // namespace

RingSpec ring_spec_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    const std::string kind = require_string(j, "kind", path);
    if (kind == "ModularInt") {
        reject_unknown_keys(j, {"kind", "n"}, path);
        return RingSpec::modular_int(require_uint(j, "n", path));
    }
    if (kind == "PrimeField") {
        reject_unknown_keys(j, {"kind", "p"}, path);
        return RingSpec::prime_field(require_uint(j, "p", path));
    }
    if (kind == "GaloisField") {
        reject_unknown_keys(j, {"kind", "p", "k"}, path);
        return RingSpec::galois_field(require_uint(j, "p", path),
                                      static_cast<std::uint32_t>(require_uint(j, "k", path)));
    }
    if (kind == "Rational") {
        reject_unknown_keys(j, {"kind"}, path);
        return RingSpec::rationals();
    }
    if (kind == "TruncatedPoly") {
        reject_unknown_keys(j, {"kind", "base", "N"}, path);
        if (!j.contains("base")) fail(path, "missing field \"base\"");
        return RingSpec::truncated_poly(ring_spec_from_json(j.at("base"), path + ".base"),
                                        static_cast<std::uint32_t>(require_uint(j, "N", path)));
    }
    if (kind == "Matrix" || kind == "UpperTriangular" || kind == "StrictUpperTriangular") {
        reject_unknown_keys(j, {"kind", "base", "d"}, path);
        if (!j.contains("base")) fail(path, "missing field \"base\"");
        RingSpec base = ring_spec_from_json(j.at("base"), path + ".base");
        const auto d = static_cast<std::uint32_t>(require_uint(j, "d", path));
        if (kind == "Matrix") return RingSpec::matrix(std::move(base), d);
        if (kind == "UpperTriangular") return RingSpec::upper_triangular(std::move(base), d);
        return RingSpec::strict_upper_triangular(std::move(base), d);
    }
    if (kind == "DirectSumShift") {
        reject_unknown_keys(j, {"kind", "base"}, path);
        if (!j.contains("base")) fail(path, "missing field \"base\"");
        return RingSpec::direct_sum_shift(ring_spec_from_json(j.at("base"), path + ".base"));
    }
    if (kind == "Dorroh") {
        reject_unknown_keys(j, {"kind", "inner", "scalar"}, path);
        if (!j.contains("inner")) fail(path, "missing field \"inner\"");
        if (!j.contains("scalar")) fail(path, "missing field \"scalar\"");
        return RingSpec::dorroh(ring_spec_from_json(j.at("inner"), path + ".inner"),
                                ring_spec_from_json(j.at("scalar"), path + ".scalar"));
    }
    fail(path + ".kind", "unknown ring kind \"" + kind + "\"");
}

json ring_spec_to_json(const RingSpec& spec) {
    json j;
    j["kind"] = ring_kind_name(spec.kind);
    switch (spec.kind) {
        case RingKind::ModularInt: j["n"] = spec.modulus; break;
        case RingKind::PrimeField: j["p"] = spec.modulus; break;
        case RingKind::GaloisField:
            j["p"] = spec.modulus;
            j["k"] = spec.param;
            break;
        case RingKind::Rational: break;
        case RingKind::TruncatedPoly:
            j["base"] = ring_spec_to_json(*spec.base);
            j["N"] = spec.param;
            break;
        case RingKind::Matrix:
        case RingKind::UpperTriangular:
        case RingKind::StrictUpperTriangular:
            j["base"] = ring_spec_to_json(*spec.base);
            j["d"] = spec.param;
            break;
        case RingKind::DirectSumShift: j["base"] = ring_spec_to_json(*spec.base); break;
        case RingKind::Dorroh:
            j["inner"] = ring_spec_to_json(*spec.base);
            j["scalar"] = ring_spec_to_json(*spec.scalar);
            break;
        case RingKind::Quotient:
            throw UnsupportedOperation("quotient rings have no config form");
    }
    return j;
}

ParseResult parse_config(const std::string& text, std::optional<std::uint64_t> default_seed) {
    ParseResult result;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        result.errors.push_back({"$", std::string("invalid JSON: ") + e.what()});
        return result;
    }
    if (!doc.is_object()) {
        result.errors.push_back({"$", "top level must be an object"});
        return result;
    }
    try {
        reject_unknown_keys(doc, {"schema_version", "scenarios"}, "$");
        if (require_uint(doc, "schema_version", "$") != 1) {
            fail("$.schema_version", "unsupported schema version");
        }
        if (!doc.contains("scenarios") || !doc.at("scenarios").is_array()) {
            fail("$", "missing \"scenarios\" array");
        }
    } catch (const ConfigError& e) {
        result.errors.push_back({"$", e.what()});
        return result;
    }

    const json& scenarios = doc.at("scenarios");
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const std::string path = "$.scenarios[" + std::to_string(i) + "]";
        const json& s = scenarios[i];
        try {
            if (!s.is_object()) fail(path, "expected an object");
            reject_unknown_keys(
                s, {"name", "ring", "sigma", "deriv", "q", "scenario", "seed", "bounds"}, path);
            ScenarioConfig cfg;
            cfg.name = require_string(s, "name", path);
            if (!s.contains("ring")) fail(path, "missing field \"ring\"");
            cfg.ring = ring_spec_from_json(s.at("ring"), path + ".ring");

            RingPtr ring;
            try {
                ring = make_ring(cfg.ring);
            } catch (const ConfigError& e) {
                fail(path + ".ring", e.what());
            }

            if (!s.contains("sigma")) fail(path, "missing field \"sigma\"");
            cfg.sigma = sigma_spec_from_json(s.at("sigma"), path + ".sigma");
            if (!s.contains("deriv")) fail(path, "missing field \"deriv\"");
            cfg.deriv = deriv_spec_from_json(s.at("deriv"), path + ".deriv");

            // the maps must fit the ring; axiom checks run later
            AutoPtr sigma;
            try {
                sigma = build_automorphism(ring, cfg.sigma);
                build_derivation(ring, sigma, cfg.deriv);
            } catch (const ConfigError& e) {
                fail(path + ".sigma", e.what());
            }

            if (s.contains("q")) {
                cfg.q = s.at("q").dump();
                const RingPtr field = ring->scalar_field();
                if (!field) fail(path + ".q", ring->describe() + " has no scalar field");
                try {
                    RingElement q = element_from_string(field, *cfg.q);
                    if (!field->is_unit(q)) {
                        fail(path + ".q",
                             field->format(q) + " is not a unit of " + field->describe());
                    }
                } catch (const ConfigError& e) {
                    fail(path + ".q", e.what());
                }
            }

            if (!s.contains("scenario") || !s.at("scenario").is_object()) {
                fail(path, "missing \"scenario\" object");
            }
            cfg.params = s.at("scenario");
            cfg.kind = require_string(cfg.params, "kind", path + ".scenario");
            validate_scenario_params(cfg.kind, cfg.params, ring, path + ".scenario");
            if ((cfg.kind == "sigma-star" || cfg.kind == "qleibniz") && !cfg.q) {
                fail(path, cfg.kind + " needs a \"q\" literal");
            }

            if (s.contains("seed")) {
                cfg.seed = require_uint(s, "seed", path);
            } else {
                cfg.seed = default_seed.value_or(0);
            }

            if (s.contains("bounds")) {
                const json& b = s.at("bounds");
                if (!b.is_object()) fail(path + ".bounds", "expected an object");
                reject_unknown_keys(b, {"degree", "terms", "samples"}, path + ".bounds");
                cfg.bounds.degree = optional_int(b, "degree", 512, path + ".bounds", 1);
                cfg.bounds.terms = optional_int(b, "terms", 64, path + ".bounds", 1);
                cfg.bounds.samples = optional_int(b, "samples", 0, path + ".bounds", 1);
            }

            result.scenarios.push_back(std::move(cfg));
        } catch (const ConfigError& e) {
            // the message already carries its path prefix
            const std::string what = e.what();
            const auto colon = what.find(": ");
            if (colon != std::string::npos && what.rfind("$.", 0) == 0) {
                result.errors.push_back({what.substr(0, colon), what.substr(colon + 2)});
            } else {
                result.errors.push_back({path, what});
            }
        }
    }
    return result;
}

}  // namespace orelab
