#pragma once

#include "orelab/element.hpp"
#include "orelab/error.hpp"
#include "orelab/prng.hpp"
#include "orelab/ring_spec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orelab {

/// Enumeration refusal threshold for the brute-force oracles.
inline constexpr std::uint64_t kEnumerationCutoff = 1u << 16;

/// A concrete coefficient ring with exact arithmetic. Instances are immutable
/// after construction and freely shareable between threads; every operation
/// is a pure function of its arguments.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    virtual ~Ring() = default;

    const RingSpec& spec() const { return spec_; }
    RingKind kind() const { return spec_.kind; }
    const std::string& signature() const { return signature_; }
    std::string describe() const { return spec_.describe(); }

    bool has_identity() const { return has_identity_; }

    /// Least c > 0 with c·1 = 0 (unital) or c·r = 0 for every spanning
    /// element (non-unital); 0 if none found within the search bound.
    std::uint64_t characteristic() const { return characteristic_; }

    /// Number of elements; nullopt when infinite (or practically unbounded).
    virtual std::optional<std::uint64_t> size() const = 0;

    bool is_enumerable() const {
        auto s = size();
        return s.has_value() && *s <= kEnumerationCutoff;
    }

    virtual RingElement zero() const = 0;
    RingElement one() const;  // throws UnsupportedOperation when !has_identity
    virtual RingElement add(const RingElement& a, const RingElement& b) const = 0;
    virtual RingElement neg(const RingElement& a) const = 0;
    virtual RingElement mul(const RingElement& a, const RingElement& b) const = 0;
    RingElement sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

    bool is_zero(const RingElement& a) const { return a == zero(); }

    /// All elements, in a fixed deterministic order.
    /// Throws UnsupportedOperation beyond the enumeration cutoff.
    std::vector<RingElement> enumerate() const;

    /// A finite additive generating family (full enumeration is not implied);
    /// for non-enumerable kinds a structurally complete sample.
    virtual std::vector<RingElement> spanning_set() const = 0;

    virtual RingElement random_element(SplitMix64& rng) const = 0;

    /// The field this ring is an algebra over, if any.
    virtual RingPtr scalar_field() const { return nullptr; }

    /// Action of the scalar field; defined iff scalar_field() != nullptr.
    virtual RingElement scalar_mul(const RingElement& scalar, const RingElement& a) const;

    /// n·a (additive), n may be negative.
    RingElement integer_multiple(std::int64_t n, const RingElement& a) const;

    /// n·1 for unital rings.
    virtual RingElement from_integer(const BigInt& n) const;

    /// Multiplicative inverse where the ring can decide it: fields directly,
    /// truncated polynomial rings over a field structurally, small enumerable
    /// rings by scanning. nullopt = not a unit (or not decidable here).
    virtual std::optional<RingElement> try_inverse(const RingElement& a) const;

    bool is_unit(const RingElement& a) const { return try_inverse(a).has_value(); }

    RingElement pow(const RingElement& a, std::uint64_t e) const;  // e >= 1

    /// Compact rendering of an element of this ring.
    virtual std::string format(const RingElement& a) const;

protected:
    explicit Ring(RingSpec spec)
        : spec_(std::move(spec)), signature_(spec_.signature()) {}

    virtual RingElement one_impl() const = 0;
    virtual std::vector<RingElement> enumerate_impl() const = 0;

    RingSpec spec_;
    std::string signature_;
    bool has_identity_ = true;
    std::uint64_t characteristic_ = 0;

    friend RingPtr finalize_ring(std::shared_ptr<Ring> r, bool has_identity);
};

/// Builds a ring from its structural description. Validates parameters
/// (n >= 2, p prime, N >= 1, d >= 1) and computes the characteristic.
RingPtr make_ring(const RingSpec& spec);

/// Unitalization R ⊕ F with product (r1,m1)(r2,m2) = (r1r2 + m2r1 + m1r2, m1m2).
/// F must be a field kind and R an F-algebra.
RingPtr dorroh_extend(const RingPtr& inner, const RingPtr& scalar);

/// Throws UsageError unless both elements belong to structurally equal rings.
void require_same_ring(const RingElement& a, const RingElement& b);

}  // namespace orelab
