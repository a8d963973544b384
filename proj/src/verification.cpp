#include "orelab/verification.hpp"

#include "orelab/error.hpp"
#include "orelab/prng.hpp"
#include "orelab/ring_kinds.hpp"

#include <sstream>

namespace orelab {

namespace {

// Exhaustive pair checking stays affordable up to this many elements;
// everything larger gets the spanning + seeded-random treatment.
constexpr std::uint64_t kExhaustiveLimit = 256;
constexpr int kRandomElements = 64;
constexpr int kRandomPairs = 256;

std::string pair_witness(const Ring& R, const char* what, const RingElement& a,
                         const RingElement& b, const RingElement& lhs, const RingElement& rhs) {
    std::ostringstream out;
    out << what << " fails at (" << R.format(a) << ", " << R.format(b) << "): lhs = "
        << R.format(lhs) << ", rhs = " << R.format(rhs);
    return out.str();
}

std::string elem_witness(const Ring& R, const char* what, const RingElement& a,
                         const RingElement& lhs, const RingElement& rhs) {
    std::ostringstream out;
    out << what << " fails at " << R.format(a) << ": lhs = " << R.format(lhs)
        << ", rhs = " << R.format(rhs);
    return out.str();
}

}  // namespace

VerificationSet make_verification_set(const RingPtr& ring, std::uint64_t seed) {
    VerificationSet set;
    SplitMix64 rng(seed);

    const bool truncated = ring->kind() == RingKind::TruncatedPoly;
    const bool small = ring->is_enumerable() && *ring->size() <= kExhaustiveLimit;

    if (small && !truncated) {
        set.elements = ring->enumerate();
        for (const auto& a : set.elements) {
            for (const auto& b : set.elements) set.pairs.emplace_back(a, b);
        }
        set.description = "exhaustive over " + std::to_string(set.elements.size()) + " elements";
        return set;
    }

    // spanning monomials (or the spanning sample) plus seeded random draws
    set.elements = ring->spanning_set();
    const std::size_t span = set.elements.size();
    for (std::size_t i = 0; i < span; ++i) {
        for (std::size_t j = 0; j < span; ++j) {
            set.pairs.emplace_back(set.elements[i], set.elements[j]);
        }
    }
    for (int i = 0; i < kRandomElements; ++i) set.elements.push_back(ring->random_element(rng));
    for (int i = 0; i < kRandomPairs; ++i) {
        set.pairs.emplace_back(ring->random_element(rng), ring->random_element(rng));
    }
    std::ostringstream d;
    d << span << " spanning elements (" << span * span << " pairs) + " << kRandomElements
      << " random elements and " << kRandomPairs << " random pairs, seed " << seed;
    set.description = d.str();
    return set;
}

CheckResult check_automorphism(const Automorphism& sigma, const VerificationSet& set) {
    const Ring& R = *sigma.ring();
    for (const auto& [a, b] : set.pairs) {
        const RingElement lhs_add = sigma.apply(R.add(a, b));
        const RingElement rhs_add = R.add(sigma.apply(a), sigma.apply(b));
        if (lhs_add != rhs_add) {
            return CheckResult::fail(pair_witness(R, "additivity", a, b, lhs_add, rhs_add));
        }
        const RingElement lhs_mul = sigma.apply(R.mul(a, b));
        const RingElement rhs_mul = R.mul(sigma.apply(a), sigma.apply(b));
        if (lhs_mul != rhs_mul) {
            return CheckResult::fail(pair_witness(R, "multiplicativity", a, b, lhs_mul, rhs_mul));
        }
    }
    for (const auto& a : set.elements) {
        const RingElement fwd = sigma.apply_inverse(sigma.apply(a));
        if (fwd != a) {
            return CheckResult::fail(elem_witness(R, "inverse (after apply)", a, fwd, a));
        }
        const RingElement bwd = sigma.apply(sigma.apply_inverse(a));
        if (bwd != a) {
            return CheckResult::fail(elem_witness(R, "inverse (before apply)", a, bwd, a));
        }
    }
    return CheckResult::pass();
}

CheckResult check_sigma_derivation(const Derivation& d, const VerificationSet& set) {
    const Ring& R = *d.ring();
    const Automorphism& sigma = *d.twist();
    for (const auto& [a, b] : set.pairs) {
        const RingElement lhs_add = d.apply(R.add(a, b));
        const RingElement rhs_add = R.add(d.apply(a), d.apply(b));
        if (lhs_add != rhs_add) {
            return CheckResult::fail(pair_witness(R, "additivity", a, b, lhs_add, rhs_add));
        }
        const RingElement lhs = d.apply(R.mul(a, b));
        const RingElement rhs = R.add(R.mul(sigma.apply(a), d.apply(b)), R.mul(d.apply(a), b));
        if (lhs != rhs) {
            return CheckResult::fail(
                pair_witness(R, "Leibniz identity D(ab) = sigma(a)D(b) + D(a)b", a, b, lhs, rhs));
        }
    }
    return CheckResult::pass();
}

CheckResult check_q_skew(const Automorphism& sigma, const Derivation& d, const RingElement& q,
                         const VerificationSet& set) {
    const Ring& R = *sigma.ring();
    const RingPtr field = R.scalar_field();
    if (!field) {
        throw ConfigError(R.describe() + " has no scalar field; q-skew needs one");
    }
    if (q.owner()->signature() != field->signature()) {
        throw UsageError("q lives in " + q.owner()->describe() + ", expected " +
                         field->describe());
    }
    if (!field->is_unit(q)) {
        throw ConfigError("q = " + field->format(q) + " is not a unit of " + field->describe());
    }
    for (const auto& a : set.elements) {
        const RingElement lhs = d.apply(sigma.apply(a));
        const RingElement rhs = R.scalar_mul(q, sigma.apply(d.apply(a)));
        if (lhs != rhs) {
            return CheckResult::fail(elem_witness(R, "D sigma = q sigma D", a, lhs, rhs));
        }
    }
    return CheckResult::pass();
}

CheckResult check_commuting(const Automorphism& sigma, const Derivation& d,
                            const VerificationSet& set) {
    const Ring& R = *sigma.ring();
    for (const auto& a : set.elements) {
        const RingElement lhs = sigma.apply(d.apply(a));
        const RingElement rhs = d.apply(sigma.apply(a));
        if (lhs != rhs) {
            return CheckResult::fail(elem_witness(R, "sigma D = D sigma", a, lhs, rhs));
        }
    }
    return CheckResult::pass();
}

}  // namespace orelab
