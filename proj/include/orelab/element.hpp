#pragma once

#include "orelab/numeric.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace orelab {

class Ring;
class RingElement;
using RingPtr = std::shared_ptr<const Ring>;

/// Finitely supported Z-indexed family: strictly increasing indices, values
/// parallel, no zero entries. The sorted-by-index form is the normal form.
struct SupportPayload {
    std::vector<std::int64_t> indices;
    std::vector<RingElement> values;
};

/// One ring element: an owner handle plus a canonical-normal-form payload.
///
/// Payload alternatives by ring kind:
///   residue            ModularInt, PrimeField
///   rational           Rational
///   children           GaloisField (k coeffs), TruncatedPoly (N coeffs),
///                      matrix kinds (d*d row-major), Dorroh ([inner, scalar]),
///                      Quotient ([representative])
///   support            DirectSumShift
class RingElement {
public:
    using Payload = std::variant<std::uint64_t, BigRational, std::vector<RingElement>, SupportPayload>;

    RingElement(RingPtr owner, Payload payload)
        : owner_(std::move(owner)), payload_(std::move(payload)) {}

    const RingPtr& owner() const { return owner_; }
    const Payload& payload() const { return payload_; }

    std::uint64_t residue() const { return std::get<std::uint64_t>(payload_); }
    const BigRational& rational() const { return std::get<BigRational>(payload_); }
    const std::vector<RingElement>& children() const {
        return std::get<std::vector<RingElement>>(payload_);
    }
    const SupportPayload& support() const { return std::get<SupportPayload>(payload_); }

    /// Total order on payloads of structurally identical rings; gives
    /// decidable equality and canonical sorting of element sets.
    static int compare(const RingElement& a, const RingElement& b);

    std::string str() const;  // compact form, delegates to the owner ring

private:
    RingPtr owner_;
    Payload payload_;
};

bool operator==(const RingElement& a, const RingElement& b);
inline bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

/// Strict weak ordering for std::set / sorting.
struct ElementLess {
    bool operator()(const RingElement& a, const RingElement& b) const {
        return RingElement::compare(a, b) < 0;
    }
};

// Arithmetic conveniences; both operands must share a structurally equal owner.
RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);
RingElement operator*(const RingElement& a, const RingElement& b);

}  // namespace orelab
