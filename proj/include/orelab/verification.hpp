#pragma once

#include "orelab/maps.hpp"
#include "orelab/ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orelab {

struct CheckResult {
    bool ok = true;
    std::string witness;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string w) { return {false, std::move(w)}; }
    explicit operator bool() const { return ok; }
};

/// The elements and pairs a map axiom is checked on. Exhaustive for small
/// enumerable rings; spanning monomials plus seeded random samples for
/// truncated polynomial rings and the non-enumerable kinds.
struct VerificationSet {
    std::vector<RingElement> elements;
    std::vector<std::pair<RingElement, RingElement>> pairs;
    std::string description;
};

VerificationSet make_verification_set(const RingPtr& ring, std::uint64_t seed);

/// Additivity, multiplicativity, and the two-sided declared inverse.
CheckResult check_automorphism(const Automorphism& sigma, const VerificationSet& set);

/// Additivity and D(ab) = sigma(a) D(b) + D(a) b.
CheckResult check_sigma_derivation(const Derivation& d, const VerificationSet& set);

/// D sigma = q sigma D. q must be a unit of the ring's scalar field
/// (ConfigError otherwise).
CheckResult check_q_skew(const Automorphism& sigma, const Derivation& d, const RingElement& q,
                         const VerificationSet& set);

/// sigma D = D sigma (the q = 1 case, no scalar field required).
CheckResult check_commuting(const Automorphism& sigma, const Derivation& d,
                            const VerificationSet& set);

/// Certificate that check_q_skew passed: the unit q and a description of the
/// verification set it was checked on.
struct QSkewCert {
    RingElement q;
    std::string verified_on;
};

}  // namespace orelab
