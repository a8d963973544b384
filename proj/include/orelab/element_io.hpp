#pragma once

#include "orelab/ring.hpp"

#include <json.hpp>

#include <string>

namespace orelab {

/// Payload syntax, by ring kind:
///   ModularInt / PrimeField   integer (negatives reduced into [0, n))
///   Rational                  integer or "a/b" string
///   GaloisField               array of <= k integers, low to high
///   TruncatedPoly             array of <= N base payloads, low to high
///   matrix kinds              array of d rows, each an array of d base
///                             payloads; forced-zero slots must hold zero
///   DirectSumShift            array of [index, base payload] pairs
///   Dorroh                    array [inner payload, scalar payload]
RingElement element_from_json(const RingPtr& ring, const nlohmann::json& j);
nlohmann::json element_to_json(const RingElement& e);

/// Parses a scalar/element literal given as text (JSON value syntax).
RingElement element_from_string(const RingPtr& ring, const std::string& text);

class OrePoly;
struct OreContext;
using OreContextPtr = std::shared_ptr<const OreContext>;

/// Polynomial literals: coefficient arrays, index i = power of x, entries in
/// the coefficient ring's payload syntax.
OrePoly poly_from_json(const OreContextPtr& ctx, const nlohmann::json& j);
nlohmann::json poly_to_json(const OrePoly& f);

}  // namespace orelab
