#include "orelab/ore.hpp"

#include "orelab/error.hpp"

#include <sstream>
#include <utility>

namespace orelab {

namespace {

constexpr int kWordExpansionCap = 16;

void require_same_context(const OrePoly& f, const OrePoly& g) {
    if (f.context()->signature != g.context()->signature) {
        throw UsageError("polynomials from different Ore contexts: " + f.context()->signature +
                         " vs " + g.context()->signature);
    }
}

const QSkewCert& require_cert(const OreContextPtr& ctx, const char* who) {
    if (!ctx->qskew) {
        throw PreconditionError(std::string(who) + " needs a q-skew certificate on " +
                                ctx->signature);
    }
    return *ctx->qskew;
}

/// x·g in left form: sum sigma(c_j) x^{j+1} + D(c_j) x^j.
std::vector<RingElement> mul_x_left(const OreContext& ctx,
                                    const std::vector<RingElement>& coeffs) {
    const Ring& R = *ctx.ring;
    std::vector<RingElement> out(coeffs.size() + 1, R.zero());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        out[j + 1] = R.add(out[j + 1], ctx.sigma->apply(coeffs[j]));
        out[j] = R.add(out[j], ctx.deriv->apply(coeffs[j]));
    }
    return out;
}

}  // namespace

OreContextPtr make_ore_context(RingPtr ring, AutoPtr sigma, DerivPtr deriv,
                               std::optional<QSkewCert> qskew) {
    if (sigma->ring()->signature() != ring->signature()) {
        throw UsageError("sigma lives on " + sigma->ring()->describe() + ", expected " +
                         ring->describe());
    }
    if (deriv->ring()->signature() != ring->signature()) {
        throw UsageError("derivation lives on " + deriv->ring()->describe() + ", expected " +
                         ring->describe());
    }
    auto ctx = std::make_shared<OreContext>();
    ctx->ring = std::move(ring);
    ctx->sigma = std::move(sigma);
    ctx->deriv = std::move(deriv);
    ctx->qskew = std::move(qskew);
    std::ostringstream sig;
    sig << ctx->ring->signature() << "[x; " << ctx->sigma->describe() << ", "
        << ctx->deriv->describe();
    if (ctx->qskew) sig << ", q=" << ctx->qskew->q.owner()->format(ctx->qskew->q);
    sig << ']';
    ctx->signature = sig.str();
    return ctx;
}

OrePoly::OrePoly(OreContextPtr ctx, std::vector<RingElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    normalize();
}

void OrePoly::normalize() {
    while (!coeffs_.empty() && ctx_->ring->is_zero(coeffs_.back())) coeffs_.pop_back();
}

OrePoly OrePoly::zero(OreContextPtr ctx) { return OrePoly(std::move(ctx), {}); }

OrePoly OrePoly::constant(OreContextPtr ctx, RingElement a) {
    return OrePoly(std::move(ctx), {std::move(a)});
}

OrePoly OrePoly::monomial(OreContextPtr ctx, RingElement a, int exp) {
    if (exp < 0) throw UsageError("monomial exponent must be >= 0");
    std::vector<RingElement> c(exp + 1, ctx->ring->zero());
    c[exp] = std::move(a);
    return OrePoly(std::move(ctx), std::move(c));
}

OrePoly OrePoly::from_coeffs(OreContextPtr ctx, std::vector<RingElement> coeffs) {
    return OrePoly(std::move(ctx), std::move(coeffs));
}

OrePoly OrePoly::x(OreContextPtr ctx) {
    RingElement one = ctx->ring->one();
    return monomial(std::move(ctx), std::move(one), 1);
}

RingElement OrePoly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return ctx_->ring->zero();
}

std::string OrePoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const RingElement c = coeffs_[i];
        if (ctx_->ring->is_zero(c)) continue;
        if (!first) out << " + ";
        first = false;
        out << ctx_->ring->format(c);
        if (i == 1) {
            out << "·x";
        } else if (i > 1) {
            out << "·x^" << i;
        }
    }
    return out.str();
}

bool operator==(const OrePoly& a, const OrePoly& b) {
    if (a.context()->signature != b.context()->signature) return false;
    if (a.coeffs().size() != b.coeffs().size()) return false;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] != b.coeffs()[i]) return false;
    }
    return true;
}

OrePoly operator+(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    const Ring& R = *f.context()->ring;
    std::vector<RingElement> out;
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(R.add(f.coeff(i), g.coeff(i)));
    return OrePoly::from_coeffs(f.context(), std::move(out));
}

OrePoly operator-(const OrePoly& f) {
    const Ring& R = *f.context()->ring;
    std::vector<RingElement> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(R.neg(c));
    return OrePoly::from_coeffs(f.context(), std::move(out));
}

OrePoly operator-(const OrePoly& f, const OrePoly& g) { return f + (-g); }

OrePoly ore_mul(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    const OreContextPtr& ctx = f.context();
    const Ring& R = *ctx->ring;
    if (f.is_zero() || g.is_zero()) return OrePoly::zero(ctx);

    std::vector<RingElement> acc(f.coeffs().size() + g.coeffs().size() - 1, R.zero());
    std::vector<RingElement> xig = g.coeffs();  // x^i · g as i advances
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) xig = mul_x_left(*ctx, xig);
        const RingElement& ai = f.coeffs()[i];
        if (R.is_zero(ai)) continue;
        for (std::size_t j = 0; j < xig.size(); ++j) {
            if (R.is_zero(xig[j])) continue;
            acc[j] = R.add(acc[j], R.mul(ai, xig[j]));
        }
    }
    return OrePoly::from_coeffs(ctx, std::move(acc));
}

OrePoly ore_mul_fast(const OrePoly& f, const OrePoly& g) {
    require_same_context(f, g);
    const OreContextPtr& ctx = f.context();
    const QSkewCert& cert = require_cert(ctx, "ore_mul_fast");
    const Ring& R = *ctx->ring;
    if (f.is_zero() || g.is_zero()) return OrePoly::zero(ctx);

    const int n = f.degree();
    std::vector<RingElement> acc(f.coeffs().size() + g.coeffs().size() - 1, R.zero());
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
        const RingElement& bj = g.coeffs()[j];
        if (R.is_zero(bj)) continue;
        // D-powers of b_j once per column
        std::vector<RingElement> dpow{bj};
        for (int t = 1; t <= n; ++t) dpow.push_back(ctx->deriv->apply(dpow.back()));
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            const RingElement& ai = f.coeffs()[i];
            if (R.is_zero(ai)) continue;
            for (std::size_t l = 0; l <= i; ++l) {
                RingElement term = ctx->sigma->power(static_cast<std::int64_t>(l), dpow[i - l]);
                term = R.scalar_mul(q_binomial(static_cast<int>(i), static_cast<int>(l), cert.q),
                                    term);
                term = R.mul(ai, term);
                acc[l + j] = R.add(acc[l + j], term);
            }
        }
    }
    return OrePoly::from_coeffs(ctx, std::move(acc));
}

OrePoly x_power_mul(int k, const OrePoly& g) {
    if (k < 0) throw UsageError("x_power_mul needs k >= 0");
    std::vector<RingElement> coeffs = g.coeffs();
    for (int i = 0; i < k; ++i) coeffs = mul_x_left(*g.context(), coeffs);
    return OrePoly::from_coeffs(g.context(), std::move(coeffs));
}

OrePoly q_leibniz(int k, const RingElement& r, const OreContextPtr& ctx) {
    if (k < 0) throw UsageError("q_leibniz needs k >= 0");
    const QSkewCert& cert = require_cert(ctx, "q_leibniz");
    const Ring& R = *ctx->ring;
    std::vector<RingElement> dpow{r};  // D^t(r)
    for (int t = 1; t <= k; ++t) dpow.push_back(ctx->deriv->apply(dpow.back()));
    std::vector<RingElement> out(k + 1, R.zero());
    for (int i = 0; i <= k; ++i) {
        RingElement term = ctx->sigma->power(i, dpow[k - i]);
        out[i] = R.scalar_mul(q_binomial(k, i, cert.q), term);
    }
    return OrePoly::from_coeffs(ctx, std::move(out));
}

OrePoly word_expansion(int n, const RingElement& a, const OreContextPtr& ctx) {
    if (n < 0) throw UsageError("word_expansion needs n >= 0");
    if (n > kWordExpansionCap) {
        throw UsageError("word_expansion enumerates 2^n words; capped at n <= " +
                         std::to_string(kWordExpansionCap));
    }
    const Ring& R = *ctx->ring;
    std::vector<RingElement> out(n + 1, R.zero());
    const std::uint64_t words = 1ull << n;
    for (std::uint64_t mask = 0; mask < words; ++mask) {
        RingElement v = a;
        int sigma_degree = 0;
        for (int b = 0; b < n; ++b) {
            if ((mask >> b) & 1) {
                v = ctx->sigma->apply(v);
                ++sigma_degree;
            } else {
                v = ctx->deriv->apply(v);
            }
        }
        out[sigma_degree] = R.add(out[sigma_degree], v);
    }
    return OrePoly::from_coeffs(ctx, std::move(out));
}

OrePoly sigma_star(const OrePoly& f) {
    const OreContextPtr& ctx = f.context();
    const QSkewCert& cert = require_cert(ctx, "sigma_star");
    const Ring& R = *ctx->ring;
    const RingPtr field = ctx->scalar();
    auto q_inv = field->try_inverse(cert.q);
    if (!q_inv) {
        throw PreconditionError("sigma_star needs q invertible in " + field->describe());
    }
    std::vector<RingElement> out;
    out.reserve(f.coeffs().size());
    RingElement qp = field->one();  // q^{-i}
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) qp = field->mul(qp, *q_inv);
        out.push_back(R.scalar_mul(qp, ctx->sigma->apply(f.coeffs()[i])));
    }
    return OrePoly::from_coeffs(ctx, std::move(out));
}

OrePoly sigma_star_inverse(const OrePoly& f) {
    const OreContextPtr& ctx = f.context();
    const QSkewCert& cert = require_cert(ctx, "sigma_star_inverse");
    const Ring& R = *ctx->ring;
    const RingPtr field = ctx->scalar();
    std::vector<RingElement> out;
    out.reserve(f.coeffs().size());
    RingElement qp = field->one();  // q^{i}
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) qp = field->mul(qp, cert.q);
        out.push_back(R.scalar_mul(qp, ctx->sigma->apply_inverse(f.coeffs()[i])));
    }
    return OrePoly::from_coeffs(ctx, std::move(out));
}

OrePoly lambda_scale(const OrePoly& f, const RingElement& beta) {
    const OreContextPtr& ctx = f.context();
    const Ring& R = *ctx->ring;
    const RingElement sb = ctx->sigma->apply(beta);
    if (sb != beta) {
        throw PreconditionError("lambda_scale needs sigma(beta) = beta",
                                "sigma(" + R.format(beta) + ") = " + R.format(sb));
    }
    const RingElement db = ctx->deriv->apply(beta);
    if (!R.is_zero(db)) {
        throw PreconditionError("lambda_scale needs D(beta) = 0",
                                "D(" + R.format(beta) + ") = " + R.format(db));
    }
    std::vector<RingElement> out;
    out.reserve(f.coeffs().size());
    RingElement bp = beta;  // beta^i
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i == 0) {
            out.push_back(f.coeffs()[0]);
        } else {
            if (i > 1) bp = R.mul(bp, beta);
            out.push_back(R.mul(f.coeffs()[i], bp));
        }
    }
    return OrePoly::from_coeffs(ctx, std::move(out));
}

std::vector<RingElement> right_form(const OrePoly& f) {
    const OreContextPtr& ctx = f.context();
    const Ring& R = *ctx->ring;
    std::vector<RingElement> out(f.coeffs().size(), R.zero());
    OrePoly rest = f;
    while (!rest.is_zero()) {
        const int n = rest.degree();
        // peel the top: a_n x^n = x^n c_n - (lower-order terms of x^n c_n)
        const RingElement cn = ctx->sigma->power(-n, rest.coeffs()[n]);
        out[n] = cn;
        rest = rest - x_power_mul(n, OrePoly::constant(ctx, cn));
        if (!rest.is_zero() && rest.degree() >= n) {
            throw InternalError("right_form failed to reduce the degree");
        }
    }
    return out;
}

OrePoly left_form(const OreContextPtr& ctx, const std::vector<RingElement>& right_coeffs) {
    OrePoly acc = OrePoly::zero(ctx);
    for (std::size_t i = 0; i < right_coeffs.size(); ++i) {
        acc = acc + x_power_mul(static_cast<int>(i), OrePoly::constant(ctx, right_coeffs[i]));
    }
    return acc;
}

OreContextPtr dorroh_lift_context(const OreContextPtr& ctx, const RingPtr& scalar) {
    const RingPtr extension = dorroh_extend(ctx->ring, scalar);
    AutoPtr lifted_sigma = dorroh_lift_automorphism(extension, ctx->sigma);
    DerivPtr lifted_deriv = dorroh_lift_derivation(extension, lifted_sigma, ctx->deriv);

    const VerificationSet set = make_verification_set(extension, 0xd0220);
    if (auto res = check_automorphism(*lifted_sigma, set); !res.ok) {
        throw InternalError("lifted automorphism failed verification: " + res.witness);
    }
    if (auto res = check_sigma_derivation(*lifted_deriv, set); !res.ok) {
        throw InternalError("lifted derivation failed verification: " + res.witness);
    }
    std::optional<QSkewCert> cert;
    if (ctx->qskew) {
        auto res = check_q_skew(*lifted_sigma, *lifted_deriv, ctx->qskew->q, set);
        if (!res.ok) {
            throw InternalError("lifted maps lost the q-skew identity: " + res.witness);
        }
        cert = QSkewCert{ctx->qskew->q, set.description};
    }
    return make_ore_context(extension, std::move(lifted_sigma), std::move(lifted_deriv),
                            std::move(cert));
}

OrePoly random_poly(const OreContextPtr& ctx, SplitMix64& rng, int max_deg) {
    const int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    std::vector<RingElement> coeffs;
    coeffs.reserve(deg + 1);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(ctx->ring->random_element(rng));
    return OrePoly::from_coeffs(ctx, std::move(coeffs));
}

}  // namespace orelab
