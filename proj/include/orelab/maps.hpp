#pragma once

#include "orelab/ring.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace orelab {

/// A ring automorphism given structurally (closed catalog of actions), with a
/// declared inverse. Axioms are checked separately; construction only
/// validates that the action fits the ring.
class Automorphism {
public:
    virtual ~Automorphism() = default;

    const RingPtr& ring() const { return ring_; }

    virtual RingElement apply(const RingElement& a) const = 0;
    virtual RingElement apply_inverse(const RingElement& a) const = 0;
    virtual std::string describe() const = 0;

    /// sigma^k, k may be negative.
    RingElement power(std::int64_t k, const RingElement& a) const;

protected:
    explicit Automorphism(RingPtr ring) : ring_(std::move(ring)) {}

    RingPtr ring_;
};

using AutoPtr = std::shared_ptr<const Automorphism>;

/// A sigma-derivation given structurally. The Leibniz identity
/// D(ab) = sigma(a) D(b) + D(a) b is checked separately.
class Derivation {
public:
    virtual ~Derivation() = default;

    const RingPtr& ring() const { return ring_; }
    const AutoPtr& twist() const { return sigma_; }

    virtual RingElement apply(const RingElement& a) const = 0;
    virtual std::string describe() const = 0;

    RingElement power(std::uint32_t k, const RingElement& a) const;

protected:
    Derivation(RingPtr ring, AutoPtr sigma) : ring_(std::move(ring)), sigma_(std::move(sigma)) {}

    RingPtr ring_;
    AutoPtr sigma_;
};

using DerivPtr = std::shared_ptr<const Derivation>;

struct AutomorphismSpec {
    enum class Action {
        Identity,
        ScaleY,      // y -> q y on truncated polynomial rings; factor is a scalar literal
        Frobenius,   // a -> a^p on a Galois field, or coefficientwise over one
        Shift,       // index shift on a direct sum
        Entrywise,   // inner automorphism applied to every entry/coefficient
        DorrohLift,  // (r, m) -> (inner(r), m)
    };

    Action action = Action::Identity;
    std::string factor;  // ScaleY only: JSON literal for the scalar
    std::shared_ptr<const AutomorphismSpec> inner;

    static AutomorphismSpec identity() { return {}; }
    static AutomorphismSpec scale_y(std::string f);
    static AutomorphismSpec frobenius();
    static AutomorphismSpec shift();
    static AutomorphismSpec entrywise(AutomorphismSpec inner);
    static AutomorphismSpec dorroh_lift(AutomorphismSpec inner);
};

struct DerivationSpec {
    enum class Action {
        Zero,
        DDy,          // formal d/dy
        QDifference,  // D(y) = 1 extended by the sigma-Leibniz rule
        DorrohLift,   // (r, m) -> (inner(r), 0)
    };

    Action action = Action::Zero;
    std::shared_ptr<const DerivationSpec> inner;

    static DerivationSpec zero() { return {}; }
    static DerivationSpec d_dy();
    static DerivationSpec q_difference();
    static DerivationSpec dorroh_lift(DerivationSpec inner);
};

/// Throws ConfigError when the action does not fit the ring (unknown factor,
/// non-unit scale, Frobenius without a Galois base, ...).
AutoPtr build_automorphism(const RingPtr& ring, const AutomorphismSpec& spec);
DerivPtr build_derivation(const RingPtr& ring, const AutoPtr& sigma, const DerivationSpec& spec);

/// Lifts of already-built maps onto a Dorroh extension of their ring:
/// (r, m) -> (sigma(r), m) and (r, m) -> (D(r), 0).
AutoPtr dorroh_lift_automorphism(const RingPtr& dorroh_ring, AutoPtr inner);
DerivPtr dorroh_lift_derivation(const RingPtr& dorroh_ring, AutoPtr lifted_sigma, DerivPtr inner);

/// Least n <= bound with sigma^n(a) = a.
std::optional<int> torsion_order(const Automorphism& sigma, const RingElement& a, int bound);

/// Least m <= bound with D^m(a) = 0.
std::optional<int> nilpotence_order(const Derivation& d, const RingElement& a, int bound);

/// Maximum per-element torsion order over the ring's spanning set, nullopt if
/// any spanning element has none within the bound. This is per-set evidence
/// only; no global order is implied unless the ring is finite.
std::optional<int> spanning_torsion_bound(const Automorphism& sigma, int bound);

}  // namespace orelab
