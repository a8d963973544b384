#pragma once

#include "orelab/ring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace orelab {

/// Concrete ring classes. Discriminate with Ring::kind() and static_cast when
/// a structural operation of one kind is needed (monomials, Frobenius, index
/// shifts); everything else goes through the Ring interface.

class ResidueRing final : public Ring {
public:
    explicit ResidueRing(RingSpec spec);

    std::optional<std::uint64_t> size() const override;
    RingElement zero() const override;
    RingElement add(const RingElement& a, const RingElement& b) const override;
    RingElement neg(const RingElement& a) const override;
    RingElement mul(const RingElement& a, const RingElement& b) const override;
    std::vector<RingElement> spanning_set() const override;
    RingElement random_element(SplitMix64& rng) const override;
    RingPtr scalar_field() const override;
    RingElement scalar_mul(const RingElement& scalar, const RingElement& a) const override;
    std::optional<RingElement> try_inverse(const RingElement& a) const override;

    RingElement make(std::uint64_t v) const;

protected:
    RingElement one_impl() const override;
    std::vector<RingElement> enumerate_impl() const override;

private:
    std::uint64_t n_;
};

class GaloisFieldRing final : public Ring {
public:
    explicit GaloisFieldRing(RingSpec spec);

    std::optional<std::uint64_t> size() const override;
    RingElement zero() const override;
    RingElement add(const RingElement& a, const RingElement& b) const override;
    RingElement neg(const RingElement& a) const override;
    RingElement mul(const RingElement& a, const RingElement& b) const override;
    std::vector<RingElement> spanning_set() const override;
    RingElement random_element(SplitMix64& rng) const override;
    RingPtr scalar_field() const override;
    RingElement scalar_mul(const RingElement& scalar, const RingElement& a) const override;
    std::optional<RingElement> try_inverse(const RingElement& a) const override;

    std::uint64_t char_p() const { return p_; }
    std::uint32_t degree() const { return k_; }

    /// a -> a^p, and its inverse a -> a^{p^{k-1}}.
    RingElement frobenius(const RingElement& a) const;
    RingElement frobenius_inverse(const RingElement& a) const;

    /// Element from low-to-high coefficients over F_p (size <= k).
    RingElement from_coefficients(const std::vector<std::uint64_t>& coeffs) const;

protected:
    RingElement one_impl() const override;
    std::vector<RingElement> enumerate_impl() const override;

private:
    RingElement pow_or_zero(const RingElement& a, std::uint64_t e) const;
    RingPtr prime_subfield() const;
    std::uint64_t coeff(const RingElement& a, std::uint32_t i) const;
    RingElement make(const std::vector<std::uint64_t>& coeffs) const;

    std::uint64_t p_;
    std::uint32_t k_;
    std::vector<std::uint64_t> irreducible_;
    RingPtr prime_subfield_;
};

class RationalField final : public Ring {
public:
    explicit RationalField(RingSpec spec);

    std::optional<std::uint64_t> size() const override;
    RingElement zero() const override;
    RingElement add(const RingElement& a, const RingElement& b) const override;
    RingElement neg(const RingElement& a) const override;
    RingElement mul(const RingElement& a, const RingElement& b) const override;
    std::vector<RingElement> spanning_set() const override;
    RingElement random_element(SplitMix64& rng) const override;
    RingPtr scalar_field() const override;
    RingElement scalar_mul(const RingElement& s, const RingElement& a) const override;
    RingElement from_integer(const BigInt& n) const override;
    std::optional<RingElement> try_inverse(const RingElement& a) const override;

    RingElement make(BigRational v) const;

protected:
    RingElement one_impl() const override;
    std::vector<RingElement> enumerate_impl() const override;
};

class TruncatedPolyRing final : public Ring {
public:
    TruncatedPolyRing(RingSpec spec, RingPtr base);

    const RingPtr& base() const { return base_; }
    std::uint32_t truncation() const { return n_; }

    std::optional<std::uint64_t> size() const override;
    RingElement zero() const override;
    RingElement add(const RingElement& a, const RingElement& b) const override;
    RingElement neg(const RingElement& a) const override;
    RingElement mul(const RingElement& a, const RingElement& b) const override;
    std::vector<RingElement> spanning_set() const override;
    RingElement random_element(SplitMix64& rng) const override;
    RingPtr scalar_field() const override;
    RingElement scalar_mul(const RingElement& s, const RingElement& a) const override;
    RingElement from_integer(const BigInt& v) const override;
    std::optional<RingElement> try_inverse(const RingElement& a) const override;

    /// b·y^j as a ring element (zero when j >= N).
    RingElement monomial(const RingElement& base_coeff, std::uint32_t j) const;

    RingElement make(std::vector<RingElement> coeffs) const;

protected:
    RingElement one_impl() const override;
    std::vector<RingElement> enumerate_impl() const override;

private:
    RingPtr base_;
    std::uint32_t n_;
};

class MatrixRing final : public Ring {
public:
    MatrixRing(RingSpec spec, RingPtr base);

    bool upper() const;
    bool strict() const;
    bool slot_free(std::uint32_t i, std::uint32_t j) const;
    std::uint32_t dim() const { return d_; }
    const RingPtr& base() const { return base_; }

    std::optional<std::uint64_t> size() const override;
    RingElement zero() const override;
    RingElement add(const RingElement& a, const RingElement& b) const override;
    RingElement neg(const RingElement& a) const override;
    RingElement mul(const RingElement& a, const RingElement& b) const override;
    std::vector<RingElement> spanning_set() const override;
    RingElement random_element(SplitMix64& rng) const override;
    RingPtr scalar_field() const override;
    RingElement scalar_mul(const RingElement& s, const RingElement& a) const override;

    /// Matrix with b at (i, j) and zeros elsewhere.
    RingElement unit(std::uint32_t i, std::uint32_t j, const RingElement& b) const;

    RingElement make(std::vector<RingElement> entries) const;

protected:
    RingElement one_impl() const override;
    std::vector<RingElement> enumerate_impl() const override;

private:
    RingPtr base_;
    std::uint32_t d_;
};

class DirectSumShiftRing final : public Ring {
public:
    DirectSumShiftRing(RingSpec spec, RingPtr base);

    const RingPtr& base() const { return base_; }

    std::optional<std::uint64_t> size() const override;
    RingElement zero() const override;
    RingElement add(const RingElement& a, const RingElement& b) const override;
    RingElement neg(const RingElement& a) const override;
    RingElement mul(const RingElement& a, const RingElement& b) const override;
    std::vector<RingElement> spanning_set() const override;
    RingElement random_element(SplitMix64& rng) const override;
    RingPtr scalar_field() const override;
    RingElement scalar_mul(const RingElement& s, const RingElement& a) const override;

    /// Element supported at a single index.
    RingElement component(std::int64_t index, const RingElement& value) const;

    /// Builds an element from unsorted (index, value) data; normalizes.
    RingElement make_supported(std::vector<std::int64_t> idx, std::vector<RingElement> val) const;

    /// Support translated by +offset (entry at i moves to i + offset).
    RingElement shift(const RingElement& a, std::int64_t offset) const;

protected:
    RingElement one_impl() const override;
    std::vector<RingElement> enumerate_impl() const override;

private:
    RingElement make(std::vector<std::int64_t> idx, std::vector<RingElement> val) const;

    RingPtr base_;
};

class DorrohRing final : public Ring {
public:
    DorrohRing(RingSpec spec, RingPtr inner, RingPtr scalar);

    const RingPtr& inner() const { return inner_; }

    std::optional<std::uint64_t> size() const override;
    RingElement zero() const override;
    RingElement add(const RingElement& a, const RingElement& b) const override;
    RingElement neg(const RingElement& a) const override;
    RingElement mul(const RingElement& a, const RingElement& b) const override;
    std::vector<RingElement> spanning_set() const override;
    RingElement random_element(SplitMix64& rng) const override;
    RingPtr scalar_field() const override;
    RingElement scalar_mul(const RingElement& s, const RingElement& a) const override;

    /// Embedding r -> (r, 0); the image is an ideal isomorphic to the inner ring.
    RingElement embed(const RingElement& r) const;

    const RingElement& inner_of(const RingElement& a) const { return a.children()[0]; }
    const RingElement& scalar_of(const RingElement& a) const { return a.children()[1]; }

    RingElement make(RingElement r, RingElement m) const;

protected:
    RingElement one_impl() const override;
    std::vector<RingElement> enumerate_impl() const override;

private:
    RingPtr inner_;
    RingPtr scalar_;
};

}  // namespace orelab
