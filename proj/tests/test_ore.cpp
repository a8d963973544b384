#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "orelab/element_io.hpp"
#include "orelab/error.hpp"
#include "orelab/gaussian.hpp"
#include "orelab/ore.hpp"
#include "orelab/ring_kinds.hpp"

using namespace orelab;
using namespace orelab::fixtures;

TEST_CASE("gaussian table basics") {
    GaussianTable t(12);
    CHECK(t.eval_at_one(2, 1) == 2);
    CHECK(t.poly(4, 2) == IntPoly{1, 1, 2, 1, 1});
    CHECK(t.eval_at_one(4, 2) == 6);
    CHECK(t.poly_or_zero(4, 5).empty());
    CHECK(t.poly_or_zero(4, -1).empty());
    CHECK_THROWS_AS(t.poly(13, 1), UsageError);

    // boundary, symmetry and the Pascal recursion itself
    for (int k = 0; k <= 12; ++k) {
        CHECK(t.poly(k, 0) == IntPoly{1});
        CHECK(t.poly(k, k) == IntPoly{1});
        for (int j = 0; j <= k; ++j) {
            CHECK(t.poly(k, j) == t.poly(k, k - j));
        }
    }
    for (int k = 1; k <= 12; ++k) {
        for (int j = 1; j < k; ++j) {
            IntPoly lhs = t.poly(k, j);
            IntPoly rhs = t.poly_or_zero(k - 1, j - 1);
            const IntPoly& shifted = t.poly(k - 1, j);
            rhs.resize(std::max(rhs.size(), shifted.size() + j), BigInt(0));
            for (std::size_t i = 0; i < shifted.size(); ++i) rhs[i + j] += shifted[i];
            while (!rhs.empty() && rhs.back() == 0) rhs.pop_back();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("gaussian root-of-unity collapse") {
    // q = 2 has multiplicative order 3 in F_7, so C(km, jm)_q = C(k, j)
    auto f7 = make_ring(RingSpec::prime_field(7));
    auto q = element_from_string(f7, "2");
    CHECK(q_binomial(6, 3, q) == f7->from_integer(2));   // C(2,1) = 2
    CHECK(q_binomial(9, 3, q) == f7->from_integer(3));   // C(3,1) = 3
    CHECK(q_binomial(12, 6, q) == f7->from_integer(6));  // C(4,2) = 6 mod 7

    GaussianTable t(12);
    for (int k = 0; 3 * k <= 12; ++k) {
        for (int j = 0; j <= k; ++j) {
            CHECK(q_binomial(3 * k, 3 * j, q) == f7->from_integer(t.eval_at_one(k, j)));
        }
    }

    // q = 1 reduces every entry to the binomial coefficient
    auto one = f7->one();
    for (int k = 0; k <= 10; ++k) {
        for (int j = 0; j <= k; ++j) {
            CHECK(q_binomial(k, j, one) == f7->from_integer(t.eval_at_one(k, j)));
        }
    }

    CHECK_THROWS_AS(q_binomial(3, 4, q), UsageError);
    CHECK_THROWS_AS(q_binomial(-1, 0, q), UsageError);
}

TEST_CASE("ore_mul against the defining relation") {
    auto ctx = quantum_plane_f7();
    auto y = y_element(ctx);
    auto X = OrePoly::x(ctx);
    auto ypoly = OrePoly::constant(ctx, y);

    // x·y = 2y·x + 1
    auto xy = ore_mul(X, ypoly);
    CHECK(xy.degree() == 1);
    CHECK(xy.coeff(1) == ctx->ring->integer_multiple(2, y));
    CHECK(xy.coeff(0) == ctx->ring->one());

    // x^2·y = 4y·x^2 + 3·x
    auto x2y = ore_mul(ore_mul(X, X), ypoly);
    CHECK(x2y.degree() == 2);
    CHECK(x2y.coeff(2) == ctx->ring->integer_multiple(4, y));
    CHECK(x2y.coeff(1) == ctx->ring->integer_multiple(3, ctx->ring->one()));
    CHECK(ctx->ring->is_zero(x2y.coeff(0)));

    // f·0 = 0
    SplitMix64 rng(1);
    auto f = random_poly(ctx, rng, 4);
    CHECK(ore_mul(f, OrePoly::zero(ctx)).is_zero());

    // context mismatch
    auto other = differential_f3();
    CHECK_THROWS_AS(ore_mul(f, OrePoly::zero(other)), UsageError);
}

TEST_CASE("q_leibniz closed form") {
    auto ctx = quantum_plane_f7();
    auto y = y_element(ctx);
    SplitMix64 rng(2);

    // k = 0 is the constant embedding
    CHECK(q_leibniz(0, y, ctx) == OrePoly::constant(ctx, y));

    // k = 1 is the defining relation
    for (int i = 0; i < 10; ++i) {
        auto r = ctx->ring->random_element(rng);
        auto lhs = q_leibniz(1, r, ctx);
        CHECK(lhs.coeff(1) == ctx->sigma->apply(r));
        CHECK(lhs.coeff(0) == ctx->deriv->apply(r));
    }

    // k = 2 on y reproduces 4y·x^2 + 3·x
    auto l2 = q_leibniz(2, y, ctx);
    CHECK(l2.coeff(2) == ctx->ring->integer_multiple(4, y));
    CHECK(l2.coeff(1) == ctx->ring->integer_multiple(3, ctx->ring->one()));

    // missing certificate
    auto bare = shift_ring_z4();
    CHECK_THROWS_AS(q_leibniz(1, bare->ring->zero(), bare), PreconditionError);
}

TEST_CASE("word expansion") {
    auto ctx = quantum_plane_f7();
    SplitMix64 rng(3);
    for (int i = 0; i < 10; ++i) {
        auto a = ctx->ring->random_element(rng);

        auto w1 = word_expansion(1, a, ctx);
        CHECK(w1.coeff(1) == ctx->sigma->apply(a));
        CHECK(w1.coeff(0) == ctx->deriv->apply(a));

        auto w2 = word_expansion(2, a, ctx);
        CHECK(w2.coeff(2) == ctx->sigma->power(2, a));
        CHECK(w2.coeff(0) == ctx->deriv->power(2, a));
        auto mixed = ctx->ring->add(ctx->sigma->apply(ctx->deriv->apply(a)),
                                    ctx->deriv->apply(ctx->sigma->apply(a)));
        CHECK(w2.coeff(1) == mixed);

        // n = 3, coefficient of x^1: the three words with one sigma
        auto w3 = word_expansion(3, a, ctx);
        const auto& S = *ctx->sigma;
        const auto& D = *ctx->deriv;
        auto sum = ctx->ring->add(
            ctx->ring->add(S.apply(D.apply(D.apply(a))), D.apply(S.apply(D.apply(a)))),
            D.apply(D.apply(S.apply(a))));
        CHECK(w3.coeff(1) == sum);
    }
    CHECK_THROWS_AS(word_expansion(17, ctx->ring->zero(), ctx), UsageError);
}

TEST_CASE("multiplication oracles agree") {
    // q_leibniz = iterated relation = word expansion, in every certified
    // context; word expansion needs no certificate and is checked everywhere
    std::vector<OreContextPtr> certified = {quantum_plane_f7(), differential_f3(),
                                            frobenius_f4(), rational_quantum_plane()};
    std::uint64_t seed = 10;
    for (const auto& ctx : certified) {
        CAPTURE(ctx->signature);
        SplitMix64 rng(seed++);
        for (int k = 0; k <= 8; ++k) {
            for (int i = 0; i < 20; ++i) {
                auto r = ctx->ring->random_element(rng);
                auto via_mul = x_power_mul(k, OrePoly::constant(ctx, r));
                CHECK(q_leibniz(k, r, ctx) == via_mul);
                CHECK(word_expansion(k, r, ctx) == via_mul);
            }
        }
    }
    // the shift ring has no certificate; words against the relation only
    auto bare = shift_ring_z4();
    SplitMix64 rng(seed);
    for (int k = 0; k <= 5; ++k) {
        for (int i = 0; i < 12; ++i) {
            auto r = bare->ring->random_element(rng);
            CHECK(word_expansion(k, r, bare) == x_power_mul(k, OrePoly::constant(bare, r)));
        }
    }
}

TEST_CASE("accelerated product agrees bit-exactly") {
    std::vector<OreContextPtr> certified = {quantum_plane_f7(), differential_f3(),
                                            frobenius_f4(), rational_quantum_plane()};
    std::uint64_t seed = 20;
    for (const auto& ctx : certified) {
        CAPTURE(ctx->signature);
        SplitMix64 rng(seed++);
        for (int i = 0; i < 40; ++i) {
            auto f = random_poly(ctx, rng, 5);
            auto g = random_poly(ctx, rng, 5);
            CHECK(ore_mul_fast(f, g) == ore_mul(f, g));
        }
    }
}

TEST_CASE("associativity and distributivity") {
    std::vector<OreContextPtr> ctxs = {quantum_plane_f7(), differential_f3(), frobenius_f4(),
                                       rational_quantum_plane(), shift_ring_z4()};
    std::uint64_t seed = 30;
    for (const auto& ctx : ctxs) {
        CAPTURE(ctx->signature);
        SplitMix64 rng(seed++);
        for (int i = 0; i < 50; ++i) {
            auto f = random_poly(ctx, rng, 3);
            auto g = random_poly(ctx, rng, 3);
            auto h = random_poly(ctx, rng, 3);
            CHECK(ore_mul(ore_mul(f, g), h) == ore_mul(f, ore_mul(g, h)));
            CHECK(ore_mul(f, g + h) == ore_mul(f, g) + ore_mul(f, h));
            CHECK(ore_mul(f + g, h) == ore_mul(f, h) + ore_mul(g, h));
        }
    }
}

TEST_CASE("degree law") {
    auto ctx = quantum_plane_f7();
    SplitMix64 rng(40);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto f = random_poly(ctx, rng, 4);
        auto g = random_poly(ctx, rng, 4);
        if (f.is_zero() || g.is_zero()) continue;
        const int n = f.degree();
        const int m = g.degree();
        auto lead = ctx->ring->mul(f.coeff(n), ctx->sigma->power(n, g.coeff(m)));
        if (ctx->ring->is_zero(lead)) continue;
        CHECK(ore_mul(f, g).degree() == n + m);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("sigma_star is an automorphism of the extension") {
    auto ctx = quantum_plane_f7();
    auto y = y_element(ctx);
    const auto& F = *ctx->scalar();

    // constants map to sigma(a)
    CHECK(sigma_star(OrePoly::constant(ctx, y)) ==
          OrePoly::constant(ctx, ctx->sigma->apply(y)));

    // a·x maps to q^{-1} sigma(a)·x
    auto q_inv = *F.try_inverse(ctx->qskew->q);
    auto ax = OrePoly::monomial(ctx, y, 1);
    auto expect = OrePoly::monomial(
        ctx, ctx->ring->scalar_mul(q_inv, ctx->sigma->apply(y)), 1);
    CHECK(sigma_star(ax) == expect);

    // multiplicativity on the pair (y x, y x^2), then on random pairs
    auto f = OrePoly::monomial(ctx, y, 1);
    auto g = OrePoly::monomial(ctx, y, 2);
    CHECK(sigma_star(ore_mul(f, g)) == ore_mul(sigma_star(f), sigma_star(g)));

    SplitMix64 rng(50);
    for (int i = 0; i < 50; ++i) {
        auto a = random_poly(ctx, rng, 4);
        auto b = random_poly(ctx, rng, 4);
        CHECK(sigma_star(ore_mul(a, b)) == ore_mul(sigma_star(a), sigma_star(b)));
        CHECK(sigma_star(a + b) == sigma_star(a) + sigma_star(b));
        CHECK(sigma_star_inverse(sigma_star(a)) == a);
        CHECK(sigma_star(sigma_star_inverse(a)) == a);
    }

    // the inverse acts as a_i x^i -> q^i sigma^{-1}(a_i) x^i
    for (int exp = 0; exp <= 4; ++exp) {
        auto a = ctx->ring->random_element(rng);
        auto qi = F.pow(ctx->qskew->q, static_cast<std::uint64_t>(exp));
        auto expected = OrePoly::monomial(
            ctx, ctx->ring->scalar_mul(qi, ctx->sigma->apply_inverse(a)), exp);
        CHECK(sigma_star_inverse(OrePoly::monomial(ctx, a, exp)) == expected);
    }
}

TEST_CASE("lambda_scale") {
    auto ctx = quantum_plane_f7();
    SplitMix64 rng(60);

    // beta = 1 fixes everything
    auto one = ctx->ring->one();
    for (int i = 0; i < 10; ++i) {
        auto f = random_poly(ctx, rng, 4);
        CHECK(lambda_scale(f, one) == f);
    }

    // monomials scale by beta^j
    auto beta = ctx->ring->integer_multiple(2, one);
    auto s = ctx->ring->random_element(rng);
    auto m = OrePoly::monomial(ctx, s, 3);
    auto expect = OrePoly::monomial(ctx, ctx->ring->mul(s, ctx->ring->pow(beta, 3)), 3);
    CHECK(lambda_scale(m, beta) == expect);

    // multiplicative for a central fixed unit in the automorphism-type case
    auto ctx0 = quantum_plane_f7_auto();
    auto beta0 = ctx0->ring->integer_multiple(2, ctx0->ring->one());
    SplitMix64 rng0(61);
    for (int i = 0; i < 30; ++i) {
        auto f = random_poly(ctx0, rng0, 3);
        auto g = random_poly(ctx0, rng0, 3);
        CHECK(lambda_scale(ore_mul(f, g), beta0) ==
              ore_mul(lambda_scale(f, beta0), lambda_scale(g, beta0)));
    }
    for (const auto& c0 : {frobenius_f4()}) {
        SplitMix64 r0(62);
        auto b = c0->ring->one();
        for (int i = 0; i < 20; ++i) {
            auto f = random_poly(c0, r0, 3);
            auto g = random_poly(c0, r0, 3);
            CHECK(lambda_scale(ore_mul(f, g), b) ==
                  ore_mul(lambda_scale(f, b), lambda_scale(g, b)));
        }
    }

    // with a nonzero derivation the map scales sigma(a)x but not D(a), so
    // multiplicativity already breaks at (x, y): beta D(y) != D(y)
    {
        auto X = OrePoly::x(ctx);
        auto yp = OrePoly::constant(ctx, y_element(ctx));
        auto lhs = lambda_scale(ore_mul(X, yp), beta);
        auto rhs = ore_mul(lambda_scale(X, beta), lambda_scale(yp, beta));
        CHECK(lhs != rhs);
        CHECK(lhs.coeff(1) == rhs.coeff(1));
        CHECK(lhs.coeff(0) == ctx->ring->one());
        CHECK(rhs.coeff(0) == beta);
    }

    // sigma must fix beta: y fails under y -> 2y
    CHECK_THROWS_AS(lambda_scale(m, y_element(ctx)), PreconditionError);

    // D must kill beta: over F_3[y]/(y^9) with d/dy, y is moved by D
    auto d3 = differential_f3();
    auto ym = OrePoly::monomial(d3, y_element(d3), 1);
    CHECK_THROWS_AS(lambda_scale(ym, y_element(d3)), PreconditionError);
}

TEST_CASE("right form") {
    auto ctx = quantum_plane_f7();
    SplitMix64 rng(70);

    // constants are fixed
    auto a = ctx->ring->random_element(rng);
    auto c = right_form(OrePoly::constant(ctx, a));
    REQUIRE(c.size() == 1);
    CHECK(c[0] == a);

    // a·x = x·sigma^{-1}(a) - D(sigma^{-1}(a))
    auto ax = OrePoly::monomial(ctx, a, 1);
    auto r = right_form(ax);
    REQUIRE(r.size() == 2);
    auto s_inv_a = ctx->sigma->apply_inverse(a);
    CHECK(r[1] == s_inv_a);
    CHECK(r[0] == ctx->ring->neg(ctx->deriv->apply(s_inv_a)));

    // round trip on 100 seeded polynomials, in two contexts
    for (const auto& c2 : {quantum_plane_f7(), frobenius_f4()}) {
        SplitMix64 r2(71);
        for (int i = 0; i < 100; ++i) {
            auto f = random_poly(c2, r2, 5);
            CHECK(left_form(c2, right_form(f)) == f);
        }
    }
}

TEST_CASE("polynomial literals round trip") {
    for (const auto& ctx : {quantum_plane_f7(), frobenius_f4(), shift_ring_z4()}) {
        CAPTURE(ctx->signature);
        SplitMix64 rng(90);
        for (int i = 0; i < 25; ++i) {
            auto f = random_poly(ctx, rng, 5);
            CHECK(poly_from_json(ctx, poly_to_json(f)) == f);
        }
    }
    // index i = power of x
    auto ctx = quantum_plane_f7();
    auto f = poly_from_json(ctx, nlohmann::json::parse("[[1], [0,2]]"));
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0) == ctx->ring->one());
    CHECK(f.coeff(1) == ctx->ring->integer_multiple(2, y_element(ctx)));
}

TEST_CASE("dorroh lifted context") {
    auto ctx = quantum_plane_f7();
    auto lifted = dorroh_lift_context(ctx, ctx->scalar());
    const auto& D = *lifted->ring;
    CHECK(D.has_identity());
    CHECK(lifted->qskew.has_value());

    // derivations kill the adjoined identity
    CHECK(D.is_zero(lifted->deriv->apply(D.one())));

    // sigma fixes the scalar coordinate: (r, 1) -> (sigma(r), 1)
    SplitMix64 rng(80);
    const auto& dr = static_cast<const DorrohRing&>(D);
    for (int i = 0; i < 20; ++i) {
        auto r = ctx->ring->random_element(rng);
        auto x = dr.make(r, lifted->scalar()->one());
        auto sx = lifted->sigma->apply(x);
        CHECK(dr.inner_of(sx) == ctx->sigma->apply(r));
        CHECK(dr.scalar_of(sx) == lifted->scalar()->one());
    }

    // Leibniz on the pair ((r,1), (s,0))
    for (int i = 0; i < 20; ++i) {
        auto r = dr.make(ctx->ring->random_element(rng), lifted->scalar()->one());
        auto s = dr.embed(ctx->ring->random_element(rng));
        auto lhs = lifted->deriv->apply(D.mul(r, s));
        auto rhs = D.add(D.mul(lifted->sigma->apply(r), lifted->deriv->apply(s)),
                         D.mul(lifted->deriv->apply(r), s));
        CHECK(lhs == rhs);
    }
}
