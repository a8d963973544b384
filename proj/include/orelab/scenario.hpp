#pragma once

#include "orelab/config.hpp"
#include "orelab/report.hpp"

#include <vector>

namespace orelab {

/// Runs one scenario: builds the ring and the maps, verifies the map axioms
/// (these are the first checks of every report), then dispatches on the
/// scenario kind. Exceptions become status "error"; failed checks make the
/// status "fail". Deterministic given the config and seed.
ScenarioReport run_scenario(const ScenarioConfig& cfg);

/// The map-verification prologue alone: automorphism axioms, Leibniz, q-skew.
ScenarioReport run_map_checks(const ScenarioConfig& cfg);

/// Runs scenarios with up to `parallelism` worker threads. Reports come back
/// in input order regardless of execution order.
std::vector<ScenarioReport> run_scenarios(const std::vector<ScenarioConfig>& configs,
                                          int parallelism = 1);

}  // namespace orelab
