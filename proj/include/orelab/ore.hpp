#pragma once

#include "orelab/gaussian.hpp"
#include "orelab/maps.hpp"
#include "orelab/verification.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace orelab {

struct OreContext;
using OreContextPtr = std::shared_ptr<const OreContext>;

/// The data of R[x; sigma, D]: coefficient ring, verified automorphism and
/// sigma-derivation, and optionally a q-skew certificate enabling the closed
/// multiplication form and the scaled automorphism of the extension.
struct OreContext {
    RingPtr ring;
    AutoPtr sigma;
    DerivPtr deriv;
    std::optional<QSkewCert> qskew;
    std::string signature;  // structural identity; polynomials mix only within it

    RingPtr scalar() const { return ring->scalar_field(); }
};

OreContextPtr make_ore_context(RingPtr ring, AutoPtr sigma, DerivPtr deriv,
                               std::optional<QSkewCert> qskew = std::nullopt);

/// Left-coefficient skew polynomial sum a_i x^i over an OreContext.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list and degree() = kZeroDegree.
class OrePoly {
public:
    static constexpr int kZeroDegree = -1;  // stands in for degree -infinity

    static OrePoly zero(OreContextPtr ctx);
    static OrePoly constant(OreContextPtr ctx, RingElement a);
    static OrePoly monomial(OreContextPtr ctx, RingElement a, int exp);
    static OrePoly from_coeffs(OreContextPtr ctx, std::vector<RingElement> coeffs);
    /// The indeterminate; needs a unital coefficient ring.
    static OrePoly x(OreContextPtr ctx);

    const OreContextPtr& context() const { return ctx_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i (the ring zero beyond the degree).
    RingElement coeff(std::size_t i) const;
    const std::vector<RingElement>& coeffs() const { return coeffs_; }

    std::string str() const;

private:
    OrePoly(OreContextPtr ctx, std::vector<RingElement> coeffs);
    void normalize();

    OreContextPtr ctx_;
    std::vector<RingElement> coeffs_;
};

bool operator==(const OrePoly& a, const OrePoly& b);
inline bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

OrePoly operator+(const OrePoly& f, const OrePoly& g);
OrePoly operator-(const OrePoly& f, const OrePoly& g);
OrePoly operator-(const OrePoly& f);

/// Product by iterated application of the defining relation
/// x·a = sigma(a)·x + D(a); the reference multiplication path.
OrePoly ore_mul(const OrePoly& f, const OrePoly& g);

/// Accelerated product through the closed q-Leibniz form; requires a q-skew
/// certificate and agrees with ore_mul bit-exactly.
OrePoly ore_mul_fast(const OrePoly& f, const OrePoly& g);

/// operator* is the reference path.
inline OrePoly operator*(const OrePoly& f, const OrePoly& g) { return ore_mul(f, g); }

/// x^k · g by k applications of the defining relation (no certificate needed).
OrePoly x_power_mul(int k, const OrePoly& g);

/// Closed form x^k r = sum_i C(k,i)_q sigma^i D^{k-i}(r) x^i.
/// Requires the context's q-skew certificate.
OrePoly q_leibniz(int k, const RingElement& r, const OreContextPtr& ctx);

/// x^n a as a sum over all 2^n words in {sigma, D}, grouped by sigma-degree.
/// A verification oracle: capped at n <= 16, no q-skew assumption.
OrePoly word_expansion(int n, const RingElement& a, const OreContextPtr& ctx);

/// The extension automorphism a_i x^i -> q^{-i} sigma(a_i) x^i, and its
/// inverse a_i x^i -> q^i sigma^{-1}(a_i) x^i. Requires the certificate.
OrePoly sigma_star(const OrePoly& f);
OrePoly sigma_star_inverse(const OrePoly& f);

/// a_j x^j -> a_j beta^j x^j. Preconditions sigma(beta) = beta and
/// D(beta) = 0 are checked exactly; violation throws with a witness.
OrePoly lambda_scale(const OrePoly& f, const RingElement& beta);

/// Right coefficients c_i with f = sum x^i c_i, via
/// a·x = x·sigma^{-1}(a) - D(sigma^{-1}(a)). left_form inverts it exactly.
std::vector<RingElement> right_form(const OrePoly& f);
OrePoly left_form(const OreContextPtr& ctx, const std::vector<RingElement>& right_coeffs);

/// Context over the Dorroh extension of the coefficient ring, with the lifted
/// maps (sigma(r), m) and (D(r), 0); both lifts are re-verified, and a failing
/// re-verification is an internal error.
OreContextPtr dorroh_lift_context(const OreContextPtr& ctx, const RingPtr& scalar);

/// Seeded random polynomial of degree <= max_deg.
OrePoly random_poly(const OreContextPtr& ctx, SplitMix64& rng, int max_deg);

}  // namespace orelab
