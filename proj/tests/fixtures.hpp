#pragma once

// Shared test contexts; each builds its maps, verifies them, and certifies
// the q-skew identity where one is declared.

#include "orelab/element_io.hpp"
#include "orelab/error.hpp"
#include "orelab/ore.hpp"

#include <stdexcept>

namespace orelab::fixtures {

inline OreContextPtr make_verified_context(const RingSpec& rs, const AutomorphismSpec& as,
                                           const DerivationSpec& ds,
                                           const char* q_literal = nullptr,
                                           std::uint64_t seed = 0xf1f7) {
    RingPtr ring = make_ring(rs);
    AutoPtr sigma = build_automorphism(ring, as);
    DerivPtr deriv = build_derivation(ring, sigma, ds);
    const VerificationSet set = make_verification_set(ring, seed);
    if (auto res = check_automorphism(*sigma, set); !res.ok) {
        throw std::runtime_error("fixture automorphism failed: " + res.witness);
    }
    if (auto res = check_sigma_derivation(*deriv, set); !res.ok) {
        throw std::runtime_error("fixture derivation failed: " + res.witness);
    }
    std::optional<QSkewCert> cert;
    if (q_literal != nullptr) {
        RingElement q = element_from_string(ring->scalar_field(), q_literal);
        if (auto res = check_q_skew(*sigma, *deriv, q, set); !res.ok) {
            throw std::runtime_error("fixture q-skew failed: " + res.witness);
        }
        cert = QSkewCert{std::move(q), set.description};
    }
    return make_ore_context(std::move(ring), std::move(sigma), std::move(deriv),
                            std::move(cert));
}

/// F_7[y]/(y^6), sigma: y -> 2y, q-difference derivation, q = 2.
inline OreContextPtr quantum_plane_f7() {
    return make_verified_context(RingSpec::truncated_poly(RingSpec::prime_field(7), 6),
                                 AutomorphismSpec::scale_y("2"), DerivationSpec::q_difference(),
                                 "2");
}

/// F_3[y]/(y^9), sigma = id, D = d/dy; commuting, so q = 1.
inline OreContextPtr differential_f3() {
    return make_verified_context(RingSpec::truncated_poly(RingSpec::prime_field(3), 9),
                                 AutomorphismSpec::identity(), DerivationSpec::d_dy(), "1");
}

/// F_3[y]/(y^3), sigma = id, D = d/dy: 27 elements, small enough for the
/// radical oracles while keeping a nonzero derivation.
inline OreContextPtr differential_f3_small() {
    return make_verified_context(RingSpec::truncated_poly(RingSpec::prime_field(3), 3),
                                 AutomorphismSpec::identity(), DerivationSpec::d_dy(), "1");
}

/// F_4[y]/(y^3) with the coefficient Frobenius, D = 0, q = 1.
inline OreContextPtr frobenius_f4() {
    return make_verified_context(RingSpec::truncated_poly(RingSpec::galois_field(2, 2), 3),
                                 AutomorphismSpec::frobenius(), DerivationSpec::zero(), "[1]");
}

/// Q[y]/(y^4), sigma: y -> 2y, automorphism type, q = 2; exact rationals.
/// (The q-difference derivation does not descend to this quotient: the
/// truncation ideal is D-stable only when 1 + q + ... + q^{N-1} vanishes in
/// the scalar field, which fails over Q.)
inline OreContextPtr rational_quantum_plane() {
    return make_verified_context(RingSpec::truncated_poly(RingSpec::rationals(), 4),
                                 AutomorphismSpec::scale_y("2"), DerivationSpec::zero(), "2");
}

/// F_7[y]/(y^6), sigma: y -> 2y, automorphism type (D = 0), q = 2.
inline OreContextPtr quantum_plane_f7_auto() {
    return make_verified_context(RingSpec::truncated_poly(RingSpec::prime_field(7), 6),
                                 AutomorphismSpec::scale_y("2"), DerivationSpec::zero(), "2");
}

/// The shift ring: direct sum of Z_4 over Z with the index-shift automorphism.
inline OreContextPtr shift_ring_z4() {
    return make_verified_context(RingSpec::direct_sum_shift(RingSpec::modular_int(4)),
                                 AutomorphismSpec::shift(), DerivationSpec::zero());
}

/// Z_4 with trivial maps.
inline OreContextPtr plain_z4() {
    return make_verified_context(RingSpec::modular_int(4), AutomorphismSpec::identity(),
                                 DerivationSpec::zero());
}

/// F_5 with trivial maps.
inline OreContextPtr plain_f5() {
    return make_verified_context(RingSpec::prime_field(5), AutomorphismSpec::identity(),
                                 DerivationSpec::zero());
}

inline RingElement y_element(const OreContextPtr& ctx) {
    return element_from_string(ctx->ring, "[0,1]");
}

}  // namespace orelab::fixtures
