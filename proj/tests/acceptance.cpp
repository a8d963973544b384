// Acceptance suite: one criterion per numbered block, one PASS/FAIL line
// each, exact arithmetic throughout. Exit status 0 iff every criterion holds
// within its stated runtime budget.

#include "fixtures.hpp"
#include "orelab/element_io.hpp"
#include "orelab/gaussian.hpp"
#include "orelab/ideal.hpp"
#include "orelab/radical.hpp"
#include "orelab/ring_kinds.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace orelab;
using namespace orelab::fixtures;

namespace {

class Harness {
public:
    void criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget_seconds > 0 && elapsed > budget_seconds) {
            ok = false;
            detail = "runtime " + std::to_string(elapsed) + " s exceeds budget " +
                     std::to_string(budget_seconds) + " s";
        }
        std::printf("%s %2d  %s (%.2f s)\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                    elapsed);
        if (!ok && !detail.empty()) std::printf("        %s\n", detail.c_str());
        ++total_;
        failures_ += ok ? 0 : 1;
    }

    int finish(double total_budget_seconds, double total_elapsed) {
        if (total_elapsed > total_budget_seconds) {
            std::printf("FAIL total runtime %.2f s exceeds %.0f s\n", total_elapsed,
                        total_budget_seconds);
            ++failures_;
        }
        std::printf("%d/%d criteria passed (%.2f s total)\n", total_ - failures_, total_,
                    total_elapsed);
        return failures_ == 0 ? 0 : 1;
    }

private:
    int total_ = 0;
    int failures_ = 0;
};

bool quasi_pair(const OrePoly& f, const OrePoly& g) {
    const OrePoly s = f + g;
    return (s + ore_mul(f, g)).is_zero() && (s + ore_mul(g, f)).is_zero();
}

}  // namespace

int main() {
    Harness h;
    const auto t0 = std::chrono::steady_clock::now();

    h.criterion(1, "q-Leibniz oracle agreement on the F_7 quantum plane", 5.0,
                [](std::string& detail) {
                    auto ctx = quantum_plane_f7();
                    SplitMix64 rng(1001);
                    for (int k = 0; k <= 10; ++k) {
                        for (int i = 0; i < 100; ++i) {
                            const RingElement r = ctx->ring->random_element(rng);
                            const OrePoly closed = q_leibniz(k, r, ctx);
                            const OrePoly iterated =
                                x_power_mul(k, OrePoly::constant(ctx, r));
                            const OrePoly words = word_expansion(k, r, ctx);
                            if (closed != iterated || words != iterated) {
                                detail = "disagreement at k = " + std::to_string(k) +
                                         ", r = " + ctx->ring->format(r);
                                return false;
                            }
                        }
                    }
                    return true;
                });

    h.criterion(2, "Gaussian root-of-unity collapse at q = 2 in F_7", 0, [](std::string& detail) {
        auto f7 = make_ring(RingSpec::prime_field(7));
        const RingElement q = element_from_string(f7, "2");
        struct Expect {
            int k, j;
            std::uint64_t value;
        };
        for (const Expect e : {Expect{6, 3, 2}, Expect{9, 3, 3}, Expect{12, 6, 6}}) {
            const RingElement got = q_binomial(e.k, e.j, q);
            if (got != f7->from_integer(e.value)) {
                detail = "C(" + std::to_string(e.k) + "," + std::to_string(e.j) +
                         ")_q = " + f7->format(got) + ", expected " + std::to_string(e.value);
                return false;
            }
        }
        // the full collapse C(3k, 3j)_q = C(k, j) while we are here
        GaussianTable t(12);
        for (int k = 0; 3 * k <= 12; ++k) {
            for (int j = 0; j <= k; ++j) {
                if (q_binomial(3 * k, 3 * j, q) != f7->from_integer(t.eval_at_one(k, j))) {
                    detail = "collapse fails at (" + std::to_string(3 * k) + "," +
                             std::to_string(3 * j) + ")";
                    return false;
                }
            }
        }
        return true;
    });

    h.criterion(3, "associativity and distributivity, 500 triples x 4 contexts", 10.0,
                [](std::string& detail) {
                    const std::vector<OreContextPtr> contexts = {
                        quantum_plane_f7(), differential_f3(), frobenius_f4(),
                        rational_quantum_plane()};
                    std::uint64_t seed = 3001;
                    for (const auto& ctx : contexts) {
                        SplitMix64 rng(seed++);
                        for (int i = 0; i < 500; ++i) {
                            const OrePoly f = random_poly(ctx, rng, 4);
                            const OrePoly g = random_poly(ctx, rng, 4);
                            const OrePoly hh = random_poly(ctx, rng, 4);
                            if (ore_mul(ore_mul(f, g), hh) != ore_mul(f, ore_mul(g, hh)) ||
                                ore_mul(f, g + hh) != ore_mul(f, g) + ore_mul(f, hh) ||
                                ore_mul(f + g, hh) != ore_mul(f, hh) + ore_mul(g, hh)) {
                                detail = "failure in " + ctx->signature;
                                return false;
                            }
                        }
                    }
                    return true;
                });

    h.criterion(4, "sigma* multiplicativity over the rational quantum plane", 0,
                [](std::string& detail) {
                    auto ctx = rational_quantum_plane();
                    SplitMix64 rng(4001);
                    for (int i = 0; i < 200; ++i) {
                        const OrePoly f = random_poly(ctx, rng, 4);
                        const OrePoly g = random_poly(ctx, rng, 4);
                        if (sigma_star(ore_mul(f, g)) !=
                            ore_mul(sigma_star(f), sigma_star(g))) {
                            detail = "pair " + f.str() + " and " + g.str();
                            return false;
                        }
                    }
                    return true;
                });

    h.criterion(5, "x^18 centralizes F_3[y]/(y^9) (m = 2, p = 3)", 0, [](std::string& detail) {
        auto ctx = differential_f3();
        SplitMix64 rng(5001);
        for (int i = 0; i < 200; ++i) {
            const RingElement a = ctx->ring->random_element(rng);
            const CheckResult res = check_central_commutation(a, 2, ctx);
            if (!res.ok) {
                detail = res.witness;
                return false;
            }
        }
        return true;
    });

    h.criterion(6, "geometric quasi-inverse of y·x^18: degree 144, exact, = Neumann", 0,
                [](std::string& detail) {
                    auto ctx = differential_f3();
                    const RingElement y = y_element(ctx);
                    const OrePoly g = geometric_quasi_inverse(y, 18, ctx);
                    if (g.degree() != 144) {
                        detail = "degree " + std::to_string(g.degree());
                        return false;
                    }
                    const OrePoly f = OrePoly::monomial(ctx, y, 18);
                    if (!quasi_pair(f, g)) {
                        detail = "quasi-inverse identities fail";
                        return false;
                    }
                    const auto res = neumann_quasi_inverse(f);
                    if (!res.found() || *res.inverse != g) {
                        detail = "Neumann route disagrees";
                        return false;
                    }
                    return true;
                });

    h.criterion(7, "shift-ring nilpotency: widths 1..3 vanish, width-3 witness", 0,
                [](std::string& detail) {
                    auto ctx = shift_ring_z4();
                    const auto& ds = static_cast<const DirectSumShiftRing&>(*ctx->ring);
                    const RingElement one = ds.base()->one();
                    auto supported = [&](int w) {
                        std::vector<std::int64_t> idx;
                        std::vector<RingElement> val;
                        for (int i = 0; i < w; ++i) {
                            idx.push_back(i);
                            val.push_back(one);
                        }
                        return ds.make_supported(std::move(idx), std::move(val));
                    };
                    SplitMix64 rng(7001);
                    for (int w : {1, 2, 3}) {
                        const RingElement a = supported(w);
                        for (int t = 0; t < 100; ++t) {
                            std::vector<OrePoly> fs;
                            for (int i = 0; i < w + 1; ++i) {
                                fs.push_back(random_poly(ctx, rng, 2));
                            }
                            if (!example35_check(a, fs).ok) {
                                detail = "a (w+1)-factor product survived at width " +
                                         std::to_string(w);
                                return false;
                            }
                        }
                    }
                    // width 3: some 3-factor product is nonzero
                    const RingElement a3 = supported(3);
                    for (int t = 0; t < 2000; ++t) {
                        std::vector<OrePoly> fs;
                        for (int i = 0; i < 3; ++i) fs.push_back(random_poly(ctx, rng, 2));
                        if (!example35_check(a3, fs).ok) return true;
                    }
                    detail = "no nonzero 3-factor witness found";
                    return false;
                });

    h.criterion(8, "finite-ring radical oracles and the J = N cross-check", 0,
                [](std::string& detail) {
                    auto z4 = make_ring(RingSpec::modular_int(4));
                    if (jacobson_radical(z4).format() != "{0, 2}") {
                        detail = "J(Z_4) = " + jacobson_radical(z4).format();
                        return false;
                    }
                    auto z8 = make_ring(RingSpec::modular_int(8));
                    if (nilradical(z8).format() != "{0, 2, 4, 6}") {
                        detail = "N(Z_8) = " + nilradical(z8).format();
                        return false;
                    }
                    auto f5 = make_ring(RingSpec::prime_field(5));
                    if (jacobson_radical(f5).size() != 1) {
                        detail = "J(F_5) is not {0}";
                        return false;
                    }
                    auto ut = make_ring(
                        RingSpec::upper_triangular(RingSpec::prime_field(2), 2));
                    {
                        const Ideal j = jacobson_radical(ut);
                        std::vector<RingElement> strict = {
                            element_from_string(ut, "[[0,0],[0,0]]"),
                            element_from_string(ut, "[[0,1],[0,0]]")};
                        std::sort(strict.begin(), strict.end(), ElementLess{});
                        if (j.elements() != strict) {
                            detail = "J(UT_2(F_2)) = " + j.format();
                            return false;
                        }
                    }
                    // every finite suite ring with at most 256 elements
                    const std::vector<RingSpec> suite = {
                        RingSpec::modular_int(4),
                        RingSpec::modular_int(8),
                        RingSpec::prime_field(2),
                        RingSpec::prime_field(3),
                        RingSpec::prime_field(5),
                        RingSpec::prime_field(7),
                        RingSpec::galois_field(2, 2),
                        RingSpec::upper_triangular(RingSpec::prime_field(2), 2),
                        RingSpec::strict_upper_triangular(RingSpec::prime_field(2), 2),
                        RingSpec::matrix(RingSpec::prime_field(2), 2),
                        RingSpec::truncated_poly(RingSpec::galois_field(2, 2), 3),
                        RingSpec::dorroh(
                            RingSpec::strict_upper_triangular(RingSpec::prime_field(2), 2),
                            RingSpec::prime_field(2)),
                    };
                    for (const auto& spec : suite) {
                        auto R = make_ring(spec);
                        if (*R->size() > 256) continue;
                        if (nilradical(R).elements() != jacobson_radical(R).elements()) {
                            detail = "J != N on " + R->describe();
                            return false;
                        }
                    }
                    return true;
                });

    h.criterion(9, "monomial inverse equations and witness chains (two instances)", 0,
                [](std::string& detail) {
                    // F_4[y]/(y^3), coefficient Frobenius, a = w y, n = 2
                    {
                        auto ctx = frobenius_f4();
                        const RingElement a =
                            element_from_string(ctx->ring, "[[0,0],[0,1],[0,0]]");
                        const auto res =
                            neumann_quasi_inverse(OrePoly::monomial(ctx, a, 2));
                        if (!res.found()) {
                            detail = "no quasi-inverse for the F_4 instance";
                            return false;
                        }
                        const EquationReport eq = thm31_equation_check(a, 2, *res.inverse);
                        if (!eq.all_ok()) {
                            detail = "an equation fails on the F_4 instance";
                            return false;
                        }
                        const WitnessChain chain = thm31_witness_chain(a, 2, *res.inverse);
                        if (!chain.ok()) {
                            detail = "the F_4 witness chain does not complete";
                            return false;
                        }
                    }
                    // Z_4, trivial maps, a = 2, n = 1
                    {
                        auto ctx = plain_z4();
                        const RingElement a = element_from_string(ctx->ring, "2");
                        const auto res =
                            neumann_quasi_inverse(OrePoly::monomial(ctx, a, 1));
                        if (!res.found()) {
                            detail = "no quasi-inverse for the Z_4 instance";
                            return false;
                        }
                        const EquationReport eq = thm31_equation_check(a, 1, *res.inverse);
                        if (!eq.all_ok()) {
                            detail = "an equation fails on the Z_4 instance";
                            return false;
                        }
                        const WitnessChain chain = thm31_witness_chain(a, 1, *res.inverse);
                        if (!chain.ok()) {
                            detail = "the Z_4 witness chain does not complete";
                            return false;
                        }
                    }
                    return true;
                });

    h.criterion(10, "termination-set semi-decision on Z_4, F_5 and the shift ring", 0,
                [](std::string& detail) {
                    {
                        auto rep = i_set_explore(plain_z4());
                        std::vector<RingElement> members;
                        for (const auto& c : rep.candidates) members.push_back(c.element);
                        auto z4 = plain_z4()->ring;
                        const std::vector<RingElement> expected = {
                            element_from_string(z4, "0"), element_from_string(z4, "2")};
                        if (members != expected || !rep.stable()) {
                            detail = "Z_4 candidate set or stability off";
                            return false;
                        }
                    }
                    {
                        auto rep = i_set_explore(plain_f5());
                        if (rep.candidates.size() != 1 ||
                            !(rep.candidates[0].element == plain_f5()->ring->zero()) ||
                            !rep.stable()) {
                            detail = "F_5 candidate set is not {0}";
                            return false;
                        }
                    }
                    {
                        auto rep = i_set_explore(shift_ring_z4(), {}, 32, 10010);
                        if (static_cast<int>(rep.candidates.size()) != rep.probed ||
                            !rep.stable()) {
                            detail = std::to_string(rep.candidates.size()) + " of " +
                                     std::to_string(rep.probed) + " sampled elements entered";
                            return false;
                        }
                    }
                    return true;
                });

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return h.finish(120.0, total);
}
