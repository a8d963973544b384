#include "orelab/radical.hpp"

#include "orelab/error.hpp"
#include "orelab/ring_kinds.hpp"

#include <algorithm>
#include <sstream>

namespace orelab {

namespace {

constexpr int kChainLengthCap = 64;

bool is_quasi_inverse_pair(const OrePoly& f, const OrePoly& g) {
    const OrePoly s = f + g;
    return (s + ore_mul(f, g)).is_zero() && (s + ore_mul(g, f)).is_zero();
}

std::string clip(std::string s, std::size_t limit = 160) {
    if (s.size() > limit) {
        s.resize(limit);
        s += "...";
    }
    return s;
}

}  // namespace

QuasiInverseResult neumann_quasi_inverse(const OrePoly& f, const RadicalBounds& bounds) {
    if (bounds.terms < 1 || bounds.degree < 0) {
        throw UsageError("neumann bounds must be positive");
    }
    QuasiInverseResult out;

    // a refutation is available from the constant term alone on finite rings
    const Ring& R = *f.context()->ring;
    if (R.is_enumerable()) {
        const RingElement a0 = f.coeff(0);
        if (!quasi_inverse_elem(a0).has_value()) {
            out.status = QuasiInverseResult::Status::Refuted;
            out.note = "constant term " + R.format(a0) + " has no quasi-inverse in " +
                       R.describe();
            return out;
        }
    }

    const OrePoly minus_f = -f;
    OrePoly power = minus_f;  // (-f)^K
    OrePoly sum = power;      // S_K
    int checked = 1;
    while (true) {
        // multiply by the fixed factor on the left: the cost of ore_mul is
        // governed by the left factor's degree, and power keeps growing
        OrePoly next = ore_mul(minus_f, power);  // (-f)^{K+1}
        ++checked;
        if (next.is_zero()) {
            // S_{K+1} = S_K: stabilized; the identities are re-verified exactly
            if (!is_quasi_inverse_pair(f, sum)) {
                throw InternalError("stabilized Neumann sum failed exact verification");
            }
            out.status = QuasiInverseResult::Status::Found;
            out.inverse = sum;
            out.partial_sums_checked = checked;
            return out;
        }
        if (checked > bounds.terms) {
            out.status = QuasiInverseResult::Status::DivergentBeyond;
            out.bound = bounds.terms;
            out.note = "no stabilization within " + std::to_string(bounds.terms) + " terms";
            out.partial_sums_checked = checked;
            return out;
        }
        if (next.degree() > bounds.degree) {
            out.status = QuasiInverseResult::Status::DivergentBeyond;
            out.bound = bounds.degree;
            out.note = "partial sums exceed degree " + std::to_string(bounds.degree);
            out.partial_sums_checked = checked;
            return out;
        }
        power = next;
        sum = sum + power;
    }
}

OrePoly geometric_quasi_inverse(const RingElement& a, int k, const OreContextPtr& ctx) {
    if (k < 0) throw UsageError("geometric_quasi_inverse needs k >= 0");
    const Ring& R = *ctx->ring;
    if (R.is_zero(a)) return OrePoly::zero(ctx);

    const auto index = nilpotence_index(a);
    if (!index) {
        throw PreconditionError("geometric_quasi_inverse refused: not nilpotent within bound",
                                R.format(a));
    }
    // x^k a = a x^k, so (a x^k)^i = a^i x^{ik}
    const OrePoly left = x_power_mul(k, OrePoly::constant(ctx, a));
    const OrePoly right = OrePoly::monomial(ctx, a, k);
    if (left != right) {
        throw PreconditionError("x^k does not commute with a",
                                "x^" + std::to_string(k) + "·a = " + clip(left.str()) +
                                    ", a·x^" + std::to_string(k) + " = " + clip(right.str()));
    }

    OrePoly g = OrePoly::zero(ctx);
    RingElement pw = a;  // (-a)^i up to sign
    for (std::uint64_t i = 1; i < *index; ++i) {
        if (i > 1) pw = R.mul(pw, a);
        const RingElement coeff = (i % 2 == 1) ? R.neg(pw) : pw;
        g = g + OrePoly::monomial(ctx, coeff, static_cast<int>(i) * k);
    }
    if (!is_quasi_inverse_pair(right, g)) {
        throw InternalError("geometric series failed exact quasi-inverse verification");
    }
    return g;
}

CheckResult check_central_commutation(const RingElement& a, int m, const OreContextPtr& ctx) {
    if (m < 1) throw UsageError("check_central_commutation needs m >= 1");
    const Ring& R = *ctx->ring;
    const std::uint64_t p = R.characteristic();
    if (p == 0 || !is_prime_u64(p)) {
        throw PreconditionError("characteristic must be a prime p > 0",
                                R.describe() + " has characteristic " + std::to_string(p));
    }
    const VerificationSet set = make_verification_set(ctx->ring, 0xc0117);
    if (auto res = check_commuting(*ctx->sigma, *ctx->deriv, set); !res.ok) {
        throw PreconditionError("sigma D = D sigma fails", res.witness);
    }
    const RingElement sma = ctx->sigma->power(m, a);
    if (sma != a) {
        throw PreconditionError("sigma^m(a) = a fails",
                                "sigma^" + std::to_string(m) + "(" + R.format(a) +
                                    ") = " + R.format(sma));
    }
    std::uint64_t pm = 1;
    for (int i = 0; i < m; ++i) {
        pm *= p;
        if (pm > (1u << 20)) throw UsageError("p^m too large for a desk-scale check");
    }
    const RingElement da = ctx->deriv->power(static_cast<std::uint32_t>(pm), a);
    if (!R.is_zero(da)) {
        throw PreconditionError("D^{p^m}(a) = 0 fails",
                                "D^" + std::to_string(pm) + "(" + R.format(a) +
                                    ") = " + R.format(da));
    }

    const std::uint64_t exponent = static_cast<std::uint64_t>(m) * pm;
    if (exponent > (1u << 12)) throw UsageError("m p^m too large for a desk-scale check");
    const OrePoly lhs = x_power_mul(static_cast<int>(exponent), OrePoly::constant(ctx, a));
    const OrePoly rhs = OrePoly::monomial(ctx, a, static_cast<int>(exponent));
    if (lhs != rhs) {
        return CheckResult::fail("x^" + std::to_string(exponent) + "·a = " + clip(lhs.str()) +
                                 " but a·x^" + std::to_string(exponent) + " = " +
                                 clip(rhs.str()));
    }
    return CheckResult::pass();
}

namespace {

/// w_{i,j}(a): the sum over all words with i sigmas and j derivations.
RingElement word_sum(int sigma_deg, int deriv_deg, const RingElement& a,
                     const OreContextPtr& ctx) {
    return word_expansion(sigma_deg + deriv_deg, a, ctx).coeff(
        static_cast<std::size_t>(sigma_deg));
}

void require_thm31_preconditions(const RingElement& a, int n, const OrePoly& f) {
    if (n < 1) throw UsageError("the monomial exponent n must be >= 1");
    const OreContextPtr& ctx = f.context();
    const OrePoly axn = OrePoly::monomial(ctx, a, n);
    if (!is_quasi_inverse_pair(axn, f)) {
        throw PreconditionError("f is not a two-sided quasi-inverse of a·x^n");
    }
    const RingElement sna = ctx->sigma->power(n, a);
    if (sna != a) {
        throw PreconditionError("sigma^n(a) = a fails",
                                "sigma^" + std::to_string(n) + "(" +
                                    ctx->ring->format(a) + ") = " + ctx->ring->format(sna));
    }
}

}  // namespace

EquationReport thm31_equation_check(const RingElement& a, int n, const OrePoly& f) {
    require_thm31_preconditions(a, n, f);
    const OreContextPtr& ctx = f.context();
    const Ring& R = *ctx->ring;
    EquationReport report;

    auto record = [&](std::string name, bool ok, std::string detail) {
        report.equations.push_back({std::move(name), ok, std::move(detail)});
    };

    if (f.is_zero()) {
        record("trivial", true, "a = 0 and f = 0; all equations hold vacuously");
        return report;
    }

    const int m = f.degree();

    // low coefficients b_0 .. b_{n-1} vanish
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < n && i <= m; ++i) {
            if (!R.is_zero(f.coeff(i))) {
                ok = false;
                detail = "b_" + std::to_string(i) + " = " + R.format(f.coeff(i));
                break;
            }
        }
        record("b_i = 0 for i < n", ok, std::move(detail));
    }

    // (e2): b_m sigma^m(a) = 0
    {
        const RingElement v = R.mul(f.coeff(m), ctx->sigma->power(m, a));
        record("(e2) b_m·sigma^m(a) = 0", R.is_zero(v), R.is_zero(v) ? "" : R.format(v));
    }

    // (e3), exponents x^{m+i} for i = 1..n-1:
    //   sum_{l = m-n+i}^{m} b_l · w_{m-n+i, l-(m-n+i)}(a) = 0
    for (int i = 1; i <= n - 1; ++i) {
        const int j = m - n + i;
        if (j < 0) continue;
        RingElement acc = R.zero();
        for (int l = std::max(j, 0); l <= m; ++l) {
            if (R.is_zero(f.coeff(l))) continue;
            acc = R.add(acc, R.mul(f.coeff(l), word_sum(j, l - j, a, ctx)));
        }
        record("(e3) i=" + std::to_string(i), R.is_zero(acc),
               R.is_zero(acc) ? "" : R.format(acc));
    }

    // (e4), exponents x^{n+i} for i = 1..m-n:
    //   b_{n+i} + sum_{l=i}^{m} b_l · w_{i, l-i}(a) = 0
    for (int i = 1; i <= m - n; ++i) {
        RingElement acc = f.coeff(n + i);
        for (int l = i; l <= m; ++l) {
            if (R.is_zero(f.coeff(l))) continue;
            acc = R.add(acc, R.mul(f.coeff(l), word_sum(i, l - i, a, ctx)));
        }
        record("(e4) i=" + std::to_string(i), R.is_zero(acc),
               R.is_zero(acc) ? "" : R.format(acc));
    }

    // (e5), exponent x^n: b_n + a + sum_{i=n}^{m} b_i D^i(a) = 0
    {
        RingElement acc = R.add(f.coeff(n), a);
        for (int i = n; i <= m; ++i) {
            if (R.is_zero(f.coeff(i))) continue;
            acc = R.add(acc, R.mul(f.coeff(i),
                                   ctx->deriv->power(static_cast<std::uint32_t>(i), a)));
        }
        record("(e5) b_n + a + sum b_i·D^i(a) = 0", R.is_zero(acc),
               R.is_zero(acc) ? "" : R.format(acc));
    }

    return report;
}

namespace {

/// All finite products (length >= 1) of the generators, by worklist closure;
/// the coefficient ring is finite so this terminates.
std::vector<RingElement> product_semigroup(const RingPtr& ring,
                                           const std::vector<RingElement>& generators) {
    std::set<RingElement, ElementLess> seen(generators.begin(), generators.end());
    std::deque<RingElement> work(generators.begin(), generators.end());
    while (!work.empty()) {
        RingElement x = work.front();
        work.pop_front();
        for (const auto& g : generators) {
            RingElement p = ring->mul(x, g);
            if (seen.insert(p).second) work.push_back(p);
        }
    }
    return std::vector<RingElement>(seen.begin(), seen.end());
}

}  // namespace

WitnessChain thm31_witness_chain(const RingElement& a, int n, const OrePoly& f,
                                 bool exhaustive_fallback) {
    require_thm31_preconditions(a, n, f);
    const OreContextPtr& ctx = f.context();
    const RingPtr& ring = ctx->ring;
    if (!ring->is_enumerable()) {
        throw PreconditionError("witness chain needs a finite coefficient ring, got " +
                                ring->describe());
    }
    const Ideal N = nilradical(ring);
    {
        const RingPtr Q = quotient(ring, N);
        const std::vector<RingElement> z = center(Q);
        const RingElement abar = quotient_project(Q, a);
        if (!std::binary_search(z.begin(), z.end(), abar, ElementLess{})) {
            throw PreconditionError("a + N must be central in R/N", ring->format(a));
        }
    }

    WitnessChain out;
    if (f.is_zero()) {
        out.final_in_nilradical = true;
        return out;
    }
    const int m = f.degree();

    auto record = [&](int j, const RingElement& rj, const char* suffix) {
        const RingElement prod = ring->mul(f.coeff(m - j), rj);
        const bool ok = N.contains(prod);
        out.steps.push_back({"b_" + std::to_string(m - j) + "·r_" + std::to_string(j) +
                                 " in N" + suffix,
                             ok, ok ? "" : ring->format(prod)});
    };

    std::vector<RingElement> semigroup;  // finite products of the sigma-orbit, lazily built
    auto fallback_search = [&](int j) -> std::optional<RingElement> {
        if (semigroup.empty()) {
            std::vector<RingElement> gens;
            gens.reserve(n);
            for (int i = 0; i < n; ++i) gens.push_back(ctx->sigma->power(i, a));
            semigroup = product_semigroup(ring, gens);
        }
        for (const auto& r : semigroup) {
            if (N.contains(ring->mul(f.coeff(m - j), r))) return r;
        }
        return std::nullopt;
    };

    std::vector<std::uint64_t> lengths;  // product length per r_j, for the cap

    // r_0 = sigma^m(a)
    out.chain.push_back(ctx->sigma->power(m, a));
    lengths.push_back(1);
    record(0, out.chain[0], "");

    for (int k = 0; k + 1 <= m - n; ++k) {
        RingElement next = ctx->sigma->power(m - k - 1, a);
        std::uint64_t len = 1;
        if (k + 1 < n) {
            // multiply by r_k r_{k-1} ... r_0, the proof's order
            for (int j = k; j >= 0; --j) {
                next = ring->mul(next, out.chain[j]);
                len += lengths[j];
            }
        } else {
            // xi = r_0 r_1 ... r_k · r_{k+1-n}
            RingElement xi = out.chain[0];
            len += lengths[0];
            for (int j = 1; j <= k; ++j) {
                xi = ring->mul(xi, out.chain[j]);
                len += lengths[j];
            }
            xi = ring->mul(xi, out.chain[k + 1 - n]);
            len += lengths[k + 1 - n];
            next = ring->mul(next, xi);
        }
        const char* suffix = "";
        if (exhaustive_fallback &&
            !N.contains(ring->mul(f.coeff(m - k - 1), next))) {
            if (auto replacement = fallback_search(k + 1)) {
                next = *replacement;
                len = 1;
                suffix = " (exhaustive fallback)";
            }
        }
        if (len > kChainLengthCap) out.cap_bound = true;
        out.chain.push_back(std::move(next));
        lengths.push_back(len);
        record(k + 1, out.chain.back(), suffix);
    }

    // closing step: a · r_{m-n} ··· r_0 in N (the reindexed r_n ··· r_m)
    RingElement prod = a;
    for (int j = m - n; j >= 0; --j) prod = ring->mul(prod, out.chain[j]);
    out.final_in_nilradical = N.contains(prod);

    return out;
}

CheckResult example35_check(const RingElement& a, const std::vector<OrePoly>& factors) {
    if (factors.empty()) throw UsageError("example35_check needs at least one factor");
    const OreContextPtr& ctx = factors.front().context();
    const RingPtr& ring = ctx->ring;
    if (ring->kind() != RingKind::DirectSumShift) {
        throw UsageError("example35_check needs DirectSumShift coefficients, got " +
                         ring->describe());
    }
    const auto& ds = static_cast<const DirectSumShiftRing&>(*ring);
    // sigma must act as the index shift and D as zero
    for (const RingElement& b : ds.base()->spanning_set()) {
        const RingElement e0 = ds.component(0, b);
        if (ctx->sigma->apply(e0) != ds.component(1, b)) {
            throw UsageError("example35_check needs the index-shift automorphism");
        }
        if (!ring->is_zero(ctx->deriv->apply(e0))) {
            throw UsageError("example35_check needs the zero derivation");
        }
    }

    OrePoly product = OrePoly::zero(ctx);
    bool first = true;
    for (const OrePoly& fi : factors) {
        const OrePoly axfi = ore_mul(OrePoly::monomial(ctx, a, 1), fi);
        product = first ? axfi : ore_mul(product, axfi);
        first = false;
    }
    if (!product.is_zero()) {
        return CheckResult::fail("nonzero product: " + clip(product.str()));
    }
    return CheckResult::pass();
}

bool ISetReport::contains(const RingElement& r) const {
    for (const auto& c : candidates) {
        if (c.element == r) return true;
    }
    return false;
}

ISetReport i_set_explore(const OreContextPtr& ctx, const RadicalBounds& bounds, int samples,
                         std::uint64_t seed) {
    const RingPtr& ring = ctx->ring;
    ISetReport report;
    report.i0_description =
        "I_0 = {sum_{i>=1} r_i x^i : r_i in candidate_I} is represented by its "
        "coefficient constraint (degree >= 1 coefficients terminate), never materialized";

    auto evidence = [&](const RingElement& r) -> std::optional<ISetEvidence> {
        const auto res = neumann_quasi_inverse(OrePoly::monomial(ctx, r, 1), bounds);
        if (!res.found()) return std::nullopt;
        return ISetEvidence{r, res.partial_sums_checked, res.inverse->degree()};
    };
    auto member = [&](const RingElement& r) { return evidence(r).has_value(); };

    std::vector<RingElement> pool;  // elements whose membership gets stability-checked
    if (ring->is_enumerable()) {
        report.exhaustive = true;
        for (const auto& r : ring->enumerate()) {
            ++report.probed;
            if (auto e = evidence(r)) report.candidates.push_back(std::move(*e));
        }
        for (const auto& c : report.candidates) pool.push_back(c.element);
    } else {
        SplitMix64 rng(seed);
        std::vector<RingElement> sampled = ring->spanning_set();
        for (int i = 0; i < samples; ++i) sampled.push_back(ring->random_element(rng));
        std::sort(sampled.begin(), sampled.end(), ElementLess{});
        sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());
        for (const auto& r : sampled) {
            ++report.probed;
            if (auto e = evidence(r)) report.candidates.push_back(std::move(*e));
        }
        for (const auto& c : report.candidates) pool.push_back(c.element);
        // keep the pairwise closure checks bounded on sampled runs
        if (pool.size() > 12) pool.erase(pool.begin() + 12, pool.end());
    }
    std::sort(report.candidates.begin(), report.candidates.end(),
              [](const ISetEvidence& x, const ISetEvidence& y) {
                  return ElementLess{}(x.element, y.element);
              });

    // additive and multiplicative closure
    report.ideal_check = CheckResult::pass();
    for (const auto& c1 : pool) {
        for (const auto& c2 : pool) {
            if (!member(ring->add(c1, c2))) {
                report.ideal_check = CheckResult::fail(
                    "sum escapes: " + ring->format(c1) + " + " + ring->format(c2));
                break;
            }
        }
        if (!report.ideal_check.ok) break;
    }
    if (report.ideal_check.ok) {
        std::vector<RingElement> multipliers;
        if (ring->is_enumerable()) {
            multipliers = ring->enumerate();
        } else {
            SplitMix64 rng(seed ^ 0x5eedu);
            multipliers = ring->spanning_set();
            for (int i = 0; i < 8; ++i) multipliers.push_back(ring->random_element(rng));
        }
        for (const auto& c : pool) {
            for (const auto& s : multipliers) {
                if (!member(ring->mul(s, c)) || !member(ring->mul(c, s))) {
                    report.ideal_check = CheckResult::fail(
                        "product escapes: s = " + ring->format(s) + ", r = " + ring->format(c));
                    break;
                }
            }
            if (!report.ideal_check.ok) break;
        }
    }

    report.sigma_invariance = CheckResult::pass();
    for (const auto& c : pool) {
        if (!member(ctx->sigma->apply(c)) || !member(ctx->sigma->apply_inverse(c))) {
            report.sigma_invariance =
                CheckResult::fail("sigma orbit escapes at " + ring->format(c));
            break;
        }
    }

    report.d_stability = CheckResult::pass();
    for (const auto& c : pool) {
        if (!member(ctx->deriv->apply(c))) {
            report.d_stability = CheckResult::fail("D image escapes at " + ring->format(c));
            break;
        }
    }

    return report;
}

}  // namespace orelab
