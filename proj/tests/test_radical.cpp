#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "orelab/element_io.hpp"
#include "orelab/error.hpp"
#include "orelab/radical.hpp"
#include "orelab/ring_kinds.hpp"

using namespace orelab;
using namespace orelab::fixtures;

namespace {

bool quasi_identities_hold(const OrePoly& f, const OrePoly& g) {
    const OrePoly s = f + g;
    return (s + ore_mul(f, g)).is_zero() && (s + ore_mul(g, f)).is_zero();
}

/// The geometric sum over F_3[y]/(y^9): sum_{i=1}^{8} (-1)^i y^i x^{18 i}.
OrePoly expected_geometric_f3(const OreContextPtr& ctx) {
    const Ring& R = *ctx->ring;
    const RingElement y = y_element(ctx);
    OrePoly out = OrePoly::zero(ctx);
    RingElement yp = y;
    for (int i = 1; i <= 8; ++i) {
        if (i > 1) yp = R.mul(yp, y);
        out = out + OrePoly::monomial(ctx, (i % 2 == 1) ? R.neg(yp) : yp, 18 * i);
    }
    return out;
}

}  // namespace

TEST_CASE("neumann series quasi-inverse") {
    auto ctx = differential_f3();

    SUBCASE("zero input") {
        auto res = neumann_quasi_inverse(OrePoly::zero(ctx));
        REQUIRE(res.found());
        CHECK(res.inverse->is_zero());
    }

    SUBCASE("y·x^18 terminates with the geometric sum") {
        auto f = OrePoly::monomial(ctx, y_element(ctx), 18);
        auto res = neumann_quasi_inverse(f);
        REQUIRE(res.found());
        CHECK(*res.inverse == expected_geometric_f3(ctx));
        CHECK(res.inverse->degree() == 144);
        CHECK(quasi_identities_hold(f, *res.inverse));
    }

    SUBCASE("1·x diverges at every bound") {
        auto qp = quantum_plane_f7();
        auto f = OrePoly::x(qp);
        for (int terms : {8, 64}) {
            auto res = neumann_quasi_inverse(f, {512, terms});
            CHECK(res.status == QuasiInverseResult::Status::DivergentBeyond);
            CHECK(res.bound == terms);
        }
    }

    SUBCASE("refutation from the constant term") {
        auto f5 = plain_f5();
        // 4 in F_5 has no quasi-inverse: 4 + s + 4s = 4 + 5s = 4 for every s
        auto f = OrePoly::constant(f5, element_from_string(f5->ring, "4"));
        auto res = neumann_quasi_inverse(f);
        CHECK(res.status == QuasiInverseResult::Status::Refuted);
        CHECK(!res.note.empty());
    }

    SUBCASE("degree bound reports divergence") {
        auto qp = quantum_plane_f7();
        auto f = OrePoly::monomial(qp, qp->ring->one(), 9);
        auto res = neumann_quasi_inverse(f, {20, 64});
        CHECK(res.status == QuasiInverseResult::Status::DivergentBeyond);
        CHECK(res.bound == 20);
    }
}

TEST_CASE("geometric quasi-inverse") {
    auto ctx = differential_f3();
    auto y = y_element(ctx);

    SUBCASE("zero element") {
        CHECK(geometric_quasi_inverse(ctx->ring->zero(), 3, ctx).is_zero());
    }

    SUBCASE("y at k = 18: degree 144, two-sided, equals the Neumann output") {
        auto g = geometric_quasi_inverse(y, 18, ctx);
        CHECK(g.degree() == 144);
        auto f = OrePoly::monomial(ctx, y, 18);
        CHECK(quasi_identities_hold(f, g));
        auto res = neumann_quasi_inverse(f);
        REQUIRE(res.found());
        CHECK(g == *res.inverse);
    }

    SUBCASE("2 in Z_4 at k = 1") {
        auto z4 = plain_z4();
        auto two = element_from_string(z4->ring, "2");
        auto g = geometric_quasi_inverse(two, 1, z4);
        CHECK(g == OrePoly::monomial(z4, two, 1));
        CHECK(quasi_identities_hold(OrePoly::monomial(z4, two, 1), g));
    }

    SUBCASE("non-nilpotent input is refused") {
        CHECK_THROWS_AS(geometric_quasi_inverse(ctx->ring->one(), 2, ctx), PreconditionError);
    }

    SUBCASE("commutation precondition carries a witness") {
        // x does not commute with y at k = 1 in the differential context
        CHECK_THROWS_AS(geometric_quasi_inverse(y, 1, ctx), PreconditionError);
    }
}

TEST_CASE("characteristic-p commutation") {
    auto ctx = differential_f3();
    auto y = y_element(ctx);

    SUBCASE("x^18 commutes with y (m = 2, p = 3)") {
        CHECK(check_central_commutation(y, 2, ctx).ok);
    }

    SUBCASE("zero derivation commutes trivially") {
        auto f5 = plain_f5();
        SplitMix64 rng(7);
        for (int m = 1; m <= 2; ++m) {
            for (int i = 0; i < 5; ++i) {
                CHECK(check_central_commutation(f5->ring->random_element(rng), m, f5).ok);
            }
        }
    }

    SUBCASE("sigma^m(a) = a is reported when it fails") {
        auto f4 = frobenius_f4();
        auto omega = element_from_string(f4->ring, "[[0,1]]");
        CHECK_THROWS_WITH_AS(check_central_commutation(omega, 1, f4),
                             doctest::Contains("sigma^m(a) = a"), PreconditionError);
    }

    SUBCASE("non-prime characteristic is a precondition violation") {
        auto z4 = plain_z4();
        CHECK_THROWS_AS(check_central_commutation(element_from_string(z4->ring, "2"), 1, z4),
                        PreconditionError);
    }
}

TEST_CASE("coefficient equations of a monomial quasi-inverse") {
    SUBCASE("trivial instance a = 0") {
        auto z4 = plain_z4();
        auto rep = thm31_equation_check(z4->ring->zero(), 1, OrePoly::zero(z4));
        CHECK(rep.all_ok());
    }

    SUBCASE("F_4[y]/(y^3) with the coefficient Frobenius, a = wy, n = 2") {
        auto ctx = frobenius_f4();
        auto a = element_from_string(ctx->ring, "[[0,0],[0,1],[0,0]]");  // w·y
        auto axn = OrePoly::monomial(ctx, a, 2);
        auto res = neumann_quasi_inverse(axn);
        REQUIRE(res.found());
        const OrePoly& f = *res.inverse;
        // f = wy·x^2 + w^2 y^2·x^4 (characteristic 2 swallows the signs)
        CHECK(f.degree() == 4);
        CHECK(f.coeff(2) == a);
        CHECK(f.coeff(4) == element_from_string(ctx->ring, "[[0,0],[0,0],[1,1]]"));

        auto rep = thm31_equation_check(a, 2, f);
        CHECK(rep.all_ok());
        // (e2) is literally b_4·sigma^4(a) = w^2 y^2 · w y = w^3 y^3 = 0
        const Ring& R = *ctx->ring;
        CHECK(R.is_zero(R.mul(f.coeff(4), ctx->sigma->power(4, a))));

        auto chain = thm31_witness_chain(a, 2, f);
        CHECK(chain.ok());
        REQUIRE(chain.chain.size() == 3);
        // r_0 = sigma^4(a) = wy
        CHECK(chain.chain[0] == a);
        CHECK(chain.final_in_nilradical);
        CHECK(!chain.cap_bound);
    }

    SUBCASE("Z_4 with trivial maps, a = 2, n = 1") {
        auto ctx = plain_z4();
        auto a = element_from_string(ctx->ring, "2");
        auto axn = OrePoly::monomial(ctx, a, 1);
        auto res = neumann_quasi_inverse(axn);
        REQUIRE(res.found());
        const OrePoly& f = *res.inverse;
        CHECK(f == OrePoly::monomial(ctx, a, 1));  // f = 2x

        auto rep = thm31_equation_check(a, 1, f);
        CHECK(rep.all_ok());

        auto chain = thm31_witness_chain(a, 1, f);
        CHECK(chain.ok());
        REQUIRE(chain.chain.size() == 1);
        CHECK(chain.chain[0] == a);  // r_0 = sigma(2) = 2, and b_1·r_0 = 0
    }

    SUBCASE("derivation-type instance: F_3[y]/(y^3), d/dy, a = y, n = 2") {
        // x^2 y = y x^2 + 2x in characteristic 3, so the quasi-inverse picks
        // up a derivation term: (y x^2)^2 = y^2 x^4 + 2y x^3 and (y x^2)^3 = 0
        auto ctx = differential_f3_small();
        auto y = element_from_string(ctx->ring, "[0,1]");
        auto axn = OrePoly::monomial(ctx, y, 2);
        auto res = neumann_quasi_inverse(axn);
        REQUIRE(res.found());
        const OrePoly& f = *res.inverse;
        auto two_y = element_from_string(ctx->ring, "[0,2]");
        auto y_sq = element_from_string(ctx->ring, "[0,0,1]");
        OrePoly expected = OrePoly::monomial(ctx, two_y, 2) +
                           OrePoly::monomial(ctx, two_y, 3) +
                           OrePoly::monomial(ctx, y_sq, 4);
        CHECK(f == expected);

        // the word sums in (e3)/(e4) now involve genuinely nonzero D words
        auto rep = thm31_equation_check(y, 2, f);
        CHECK(rep.all_ok());
        CHECK(rep.equations.size() == 6);  // low coeffs, e2, e3 x1, e4 x2, e5

        auto chain = thm31_witness_chain(y, 2, f);
        CHECK(chain.ok());
        CHECK(chain.chain.size() == 3);  // r_0 .. r_{m-n} with m = 4
    }

    SUBCASE("the exhaustive fallback leaves a passing chain unchanged") {
        auto ctx = frobenius_f4();
        auto a = element_from_string(ctx->ring, "[[0,0],[0,1],[0,0]]");
        auto res = neumann_quasi_inverse(OrePoly::monomial(ctx, a, 2));
        REQUIRE(res.found());
        auto plain = thm31_witness_chain(a, 2, *res.inverse, false);
        auto with_fallback = thm31_witness_chain(a, 2, *res.inverse, true);
        CHECK(plain.ok());
        CHECK(with_fallback.ok());
        CHECK(plain.chain.size() == with_fallback.chain.size());
        for (std::size_t i = 0; i < plain.chain.size(); ++i) {
            CHECK(plain.chain[i] == with_fallback.chain[i]);
        }
    }

    SUBCASE("a quasi-inverse is required") {
        auto ctx = plain_z4();
        auto a = element_from_string(ctx->ring, "2");
        CHECK_THROWS_AS(thm31_equation_check(a, 1, OrePoly::x(ctx)), PreconditionError);
    }
}

TEST_CASE("shift-ring nilpotency products") {
    auto ctx = shift_ring_z4();
    const auto& ds = static_cast<const DirectSumShiftRing&>(*ctx->ring);
    const RingPtr base = ds.base();
    auto one = base->one();

    auto supported = [&](int lo, int hi) {
        std::vector<std::int64_t> idx;
        std::vector<RingElement> val;
        for (int i = lo; i <= hi; ++i) {
            idx.push_back(i);
            val.push_back(one);
        }
        return ds.make_supported(std::move(idx), std::move(val));
    };

    SUBCASE("a = 0 kills any product") {
        SplitMix64 rng(11);
        std::vector<OrePoly> fs = {random_poly(ctx, rng, 2), random_poly(ctx, rng, 2)};
        CHECK(example35_check(ctx->ring->zero(), fs).ok);
    }

    SUBCASE("width w supports vanish with w+1 factors") {
        SplitMix64 rng(12);
        for (int w : {1, 2, 3}) {
            auto a = supported(0, w - 1);
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<OrePoly> fs;
                for (int i = 0; i < w + 1; ++i) fs.push_back(random_poly(ctx, rng, 2));
                CAPTURE(w);
                CHECK(example35_check(a, fs).ok);
            }
        }
    }

    SUBCASE("width 3 has a 3-factor nonzero witness") {
        auto a = supported(0, 2);
        // constants with supports stepping down meet the shifted copies of a
        std::vector<OrePoly> fs = {
            OrePoly::constant(ctx, ds.component(1, one)),
            OrePoly::constant(ctx, ds.component(0, one)),
            OrePoly::constant(ctx, ds.component(-1, one)),
        };
        auto res = example35_check(a, fs);
        CHECK(!res.ok);

        // and a seeded search also finds one
        SplitMix64 rng(13);
        bool found = false;
        for (int trial = 0; trial < 500 && !found; ++trial) {
            std::vector<OrePoly> gs;
            for (int i = 0; i < 3; ++i) gs.push_back(random_poly(ctx, rng, 2));
            found = !example35_check(a, gs).ok;
        }
        CHECK(found);
    }

    SUBCASE("wrong ring kind is a usage error") {
        auto z4 = plain_z4();
        std::vector<OrePoly> fs = {OrePoly::x(z4)};
        CHECK_THROWS_AS(example35_check(z4->ring->one(), fs), UsageError);
    }
}

TEST_CASE("bounded exploration of the termination set") {
    SUBCASE("Z_4 with trivial maps: {0, 2}, all stability checks pass") {
        auto ctx = plain_z4();
        auto rep = i_set_explore(ctx);
        CHECK(rep.exhaustive);
        REQUIRE(rep.candidates.size() == 2);
        CHECK(rep.contains(element_from_string(ctx->ring, "0")));
        CHECK(rep.contains(element_from_string(ctx->ring, "2")));
        CHECK(rep.stable());
    }

    SUBCASE("F_5: only zero") {
        auto ctx = plain_f5();
        auto rep = i_set_explore(ctx);
        REQUIRE(rep.candidates.size() == 1);
        CHECK(rep.candidates[0].element == ctx->ring->zero());
        CHECK(rep.stable());
    }

    SUBCASE("every sampled shift-ring element enters") {
        auto ctx = shift_ring_z4();
        auto rep = i_set_explore(ctx, {}, 32, 99);
        CHECK(!rep.exhaustive);
        CHECK(rep.probed >= 20);
        CHECK(static_cast<int>(rep.candidates.size()) == rep.probed);
        CHECK(rep.stable());
    }
}

TEST_CASE("nilpotent pipeline over F_3[y]/(y^9)") {
    // locally torsion sigma (identity), locally nilpotent D, characteristic 3:
    // for nilpotent a, x^{m p^m} centralizes a, the geometric series verifies,
    // and both quasi-inverse routes agree
    auto ctx = differential_f3();
    const Ring& R = *ctx->ring;
    auto y = y_element(ctx);
    SplitMix64 rng(21);
    const int m = 2;
    const int exponent = 18;  // m * 3^m
    for (int i = 0; i < 10; ++i) {
        auto a = R.mul(y, R.random_element(rng));  // nilpotent: multiple of y
        CHECK(check_central_commutation(a, m, ctx).ok);
        auto g = geometric_quasi_inverse(a, exponent, ctx);
        auto res = neumann_quasi_inverse(OrePoly::monomial(ctx, a, exponent));
        REQUIRE(res.found());
        CHECK(g == *res.inverse);
    }
}
