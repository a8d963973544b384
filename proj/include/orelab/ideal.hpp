#pragma once

#include "orelab/ring.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace orelab {

/// Explicit two-sided ideal of a finite ring: a sorted, deduplicated element
/// set. Construction via closure() guarantees the ideal axioms; verify()
/// re-checks them exhaustively and surfaces a witness on failure.
class Ideal {
public:
    Ideal(RingPtr owner, std::vector<RingElement> elements);

    const RingPtr& owner() const { return owner_; }
    const std::vector<RingElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const RingElement& a) const;

    /// Smallest two-sided ideal containing the generators: worklist closure
    /// under addition, negation and multiplication by every ring element
    /// (with the adjoined-identity view, so Z-multiples are included).
    static Ideal closure(const RingPtr& ring, const std::vector<RingElement>& generators);

    /// nullopt when this is an ideal; otherwise a witness. The witness is a
    /// pair (x, y) whose sum or product escapes the set.
    std::optional<std::pair<RingElement, RingElement>> verify() const;

    std::string format() const;

private:
    RingPtr owner_;
    std::vector<RingElement> elements_;  // sorted by RingElement::compare
};

/// The unique s with r + s + rs = 0 = r + s + sr, if one exists.
/// Exhaustive scan; the owner ring must be enumerable.
std::optional<RingElement> quasi_inverse_elem(const RingElement& r);

/// Largest ideal of quasi-regular elements, by brute force over the ring with
/// the adjoined-identity view; verified to be an ideal before returning.
Ideal jacobson_radical(const RingPtr& ring);

/// Sum of all nil ideals: elements whose generated two-sided ideal is nil,
/// closed under addition and re-verified nil.
Ideal nilradical(const RingPtr& ring);

/// {z : zr = rz for all r}, sorted.
std::vector<RingElement> center(const RingPtr& ring);

bool is_nilpotent(const RingElement& a);

/// Least v >= 1 with a^v = 0, if a is nilpotent (bound |R| or 64 for
/// non-enumerable rings).
std::optional<std::uint64_t> nilpotence_index(const RingElement& a);

/// Ring of coset representatives R/I with canonical representative selection
/// (first element of each coset in enumeration order). Throws
/// PreconditionError with a witness pair when I is not an ideal.
RingPtr quotient(const RingPtr& ring, const Ideal& ideal);

/// Natural projection R -> R/I; `q` must come from quotient().
RingElement quotient_project(const RingPtr& q, const RingElement& base_elem);

/// Representative in the base ring of a quotient element.
const RingElement& quotient_lift(const RingElement& q_elem);

}  // namespace orelab
