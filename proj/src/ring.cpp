#include "orelab/ring.hpp"

#include "orelab/numeric.hpp"
#include "orelab/ring_kinds.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace orelab {

namespace {

constexpr std::uint64_t kCharSearchBound = 1u << 16;
constexpr std::uint64_t kMaxResidueModulus = 1u << 20;

using Children = std::vector<RingElement>;

/// c·a by repeated doubling; c >= 1.
RingElement repeated_add(const Ring& r, const RingElement& a, std::uint64_t c) {
    RingElement acc = r.zero();
    RingElement base = a;
    while (c > 0) {
        if (c & 1) acc = r.add(acc, base);
        c >>= 1;
        if (c > 0) base = r.add(base, base);
    }
    return acc;
}

/// Least c in [1, bound] with c·a = 0, else 0.
std::uint64_t additive_order(const Ring& r, const RingElement& a, std::uint64_t bound) {
    const RingElement z = r.zero();
    RingElement acc = a;
    for (std::uint64_t c = 1; c <= bound; ++c) {
        if (acc == z) return c;
        acc = r.add(acc, a);
    }
    return 0;
}

std::uint64_t compute_characteristic(const Ring& r) {
    const std::uint64_t bound = r.size().value_or(kCharSearchBound);
    if (r.has_identity()) return additive_order(r, r.one(), bound);
    std::uint64_t c = 1;
    for (const RingElement& s : r.spanning_set()) {
        const std::uint64_t o = additive_order(r, s, bound);
        if (o == 0) return 0;
        c = lcm_capped_u64(c, o, bound);
        if (c == 0) return 0;
    }
    return c;
}

/// Cartesian-product enumeration over `slots` copies of `values`, emitted
/// through `make` in odometer order.
template <typename Make>
std::vector<RingElement> enumerate_tuples(std::size_t slots,
                                          const std::vector<RingElement>& values,
                                          Make make) {
    std::vector<RingElement> out;
    std::vector<std::size_t> odo(slots, 0);
    while (true) {
        Children tuple;
        tuple.reserve(slots);
        for (std::size_t i = 0; i < slots; ++i) tuple.push_back(values[odo[i]]);
        out.push_back(make(std::move(tuple)));
        if (slots == 0) break;
        std::size_t i = 0;
        for (; i < slots; ++i) {
            if (++odo[i] < values.size()) break;
            odo[i] = 0;
        }
        if (i == slots) break;
    }
    return out;
}

std::optional<std::uint64_t> pow_size(std::optional<std::uint64_t> base, std::uint64_t exp) {
    if (!base) return std::nullopt;
    std::uint64_t s = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (*base != 0 && s > (1ull << 62) / *base) return std::nullopt;  // practically unbounded
        s *= *base;
    }
    return s;
}

bool field_kind(RingKind k) {
    return k == RingKind::PrimeField || k == RingKind::GaloisField || k == RingKind::Rational;
}

using SmallPoly = std::vector<std::uint64_t>;  // coefficient i = coeff of y^i

SmallPoly poly_mul(const SmallPoly& a, const SmallPoly& b, std::uint64_t p) {
    SmallPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + mul_mod_u64(a[i], b[j], p)) % p;
        }
    }
    return out;
}

/// Remainder of a by monic divisor d.
SmallPoly poly_rem(SmallPoly a, const SmallPoly& d, std::uint64_t p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (a.size() >= d.size()) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::uint64_t sub = mul_mod_u64(lead, d[i], p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

/// First monic irreducible of degree k over F_p in lexicographic order of the
/// low coefficients, by trial division (orders here are capped at 2^16).
SmallPoly find_irreducible(std::uint64_t p, std::uint32_t k) {
    std::vector<SmallPoly> divisors;  // all monic polys of degree 1..k/2
    for (std::uint32_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            SmallPoly m(d + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < d; ++i) {
                m[i] = c % p;
                c /= p;
            }
            m[d] = 1;
            divisors.push_back(std::move(m));
        }
    }
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        SmallPoly f(k + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[k] = 1;
        bool irreducible = f[0] != 0 || k == 1;
        if (irreducible) {
            for (const auto& m : divisors) {
                if (poly_rem(f, m, p).empty()) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return f;
    }
    throw InternalError("no irreducible polynomial found");
}

}  // namespace

// ---------------------------------------------------------------------------
// ResidueRing: Z/nZ and F_p

ResidueRing::ResidueRing(RingSpec spec) : Ring(std::move(spec)), n_(spec_.modulus) {}

std::optional<std::uint64_t> ResidueRing::size() const { return n_; }

RingElement ResidueRing::make(std::uint64_t v) const { return RingElement(shared_from_this(), v); }

RingElement ResidueRing::zero() const { return make(0); }
RingElement ResidueRing::one_impl() const { return make(1 % n_); }

RingElement ResidueRing::add(const RingElement& a, const RingElement& b) const {
    std::uint64_t s = a.residue() + b.residue();
    if (s >= n_) s -= n_;
    return make(s);
}

RingElement ResidueRing::neg(const RingElement& a) const {
    return make(a.residue() == 0 ? 0 : n_ - a.residue());
}

RingElement ResidueRing::mul(const RingElement& a, const RingElement& b) const {
    return make(mul_mod_u64(a.residue(), b.residue(), n_));
}

std::vector<RingElement> ResidueRing::spanning_set() const { return {make(1 % n_)}; }

RingElement ResidueRing::random_element(SplitMix64& rng) const { return make(rng.below(n_)); }

RingPtr ResidueRing::scalar_field() const {
    return kind() == RingKind::PrimeField ? shared_from_this() : nullptr;
}

RingElement ResidueRing::scalar_mul(const RingElement& scalar, const RingElement& a) const {
    if (kind() != RingKind::PrimeField) return Ring::scalar_mul(scalar, a);
    return mul(scalar, a);
}

std::optional<RingElement> ResidueRing::try_inverse(const RingElement& a) const {
    // extended gcd; decides units of any modulus, prime or not
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n_);
    std::int64_t new_r = static_cast<std::int64_t>(a.residue());
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += static_cast<std::int64_t>(n_);
    return make(static_cast<std::uint64_t>(t));
}

std::vector<RingElement> ResidueRing::enumerate_impl() const {
    std::vector<RingElement> out;
    out.reserve(n_);
    for (std::uint64_t v = 0; v < n_; ++v) out.push_back(make(v));
    return out;
}

// ---------------------------------------------------------------------------
// GaloisFieldRing

GaloisFieldRing::GaloisFieldRing(RingSpec spec)
    : Ring(std::move(spec)),
      p_(spec_.modulus),
      k_(spec_.param),
      irreducible_(find_irreducible(p_, k_)),
      prime_subfield_(make_ring(RingSpec::prime_field(p_))) {}

std::optional<std::uint64_t> GaloisFieldRing::size() const {
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < k_; ++i) s *= p_;
    return s;
}

RingPtr GaloisFieldRing::prime_subfield() const { return prime_subfield_; }

std::uint64_t GaloisFieldRing::coeff(const RingElement& a, std::uint32_t i) const {
    return a.children()[i].residue();
}

RingElement GaloisFieldRing::make(const std::vector<std::uint64_t>& coeffs) const {
    Children kids;
    kids.reserve(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        kids.push_back(RingElement(prime_subfield_, i < coeffs.size() ? coeffs[i] : 0));
    }
    return RingElement(shared_from_this(), std::move(kids));
}

RingElement GaloisFieldRing::from_coefficients(const std::vector<std::uint64_t>& coeffs) const {
    if (coeffs.size() > k_) throw UsageError("too many coefficients for " + describe());
    SmallPoly c(coeffs);
    for (auto& v : c) v %= p_;
    return make(c);
}

RingElement GaloisFieldRing::zero() const { return make({}); }

RingElement GaloisFieldRing::one_impl() const { return make({1 % p_}); }

RingElement GaloisFieldRing::add(const RingElement& a, const RingElement& b) const {
    SmallPoly c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) c[i] = (coeff(a, i) + coeff(b, i)) % p_;
    return make(c);
}

RingElement GaloisFieldRing::neg(const RingElement& a) const {
    SmallPoly c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) c[i] = (p_ - coeff(a, i)) % p_;
    return make(c);
}

RingElement GaloisFieldRing::mul(const RingElement& a, const RingElement& b) const {
    SmallPoly pa(k_), pb(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        pa[i] = coeff(a, i);
        pb[i] = coeff(b, i);
    }
    SmallPoly prod = poly_rem(poly_mul(pa, pb, p_), irreducible_, p_);
    prod.resize(k_, 0);
    return make(prod);
}

std::vector<RingElement> GaloisFieldRing::spanning_set() const {
    std::vector<RingElement> out;
    for (std::uint32_t j = 0; j < k_; ++j) {
        SmallPoly c(k_, 0);
        c[j] = 1;
        out.push_back(make(c));
    }
    return out;
}

RingElement GaloisFieldRing::random_element(SplitMix64& rng) const {
    SmallPoly c(k_);
    for (auto& v : c) v = rng.below(p_);
    return make(c);
}

RingPtr GaloisFieldRing::scalar_field() const { return prime_subfield_; }

RingElement GaloisFieldRing::scalar_mul(const RingElement& scalar, const RingElement& a) const {
    const std::uint64_t m = scalar.residue();
    SmallPoly c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) c[i] = mul_mod_u64(m, coeff(a, i), p_);
    return make(c);
}

std::optional<RingElement> GaloisFieldRing::try_inverse(const RingElement& a) const {
    if (is_zero(a)) return std::nullopt;
    return pow(a, *size() - 2);
}

RingElement GaloisFieldRing::pow_or_zero(const RingElement& a, std::uint64_t e) const {
    return is_zero(a) ? zero() : pow(a, e);
}

RingElement GaloisFieldRing::frobenius(const RingElement& a) const { return pow_or_zero(a, p_); }

RingElement GaloisFieldRing::frobenius_inverse(const RingElement& a) const {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i + 1 < k_; ++i) e *= p_;
    return pow_or_zero(a, e);
}

std::vector<RingElement> GaloisFieldRing::enumerate_impl() const {
    std::vector<RingElement> out;
    const std::uint64_t total = *size();
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        SmallPoly c(k_);
        std::uint64_t v = code;
        for (std::uint32_t i = 0; i < k_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        out.push_back(make(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// RationalField

RationalField::RationalField(RingSpec spec) : Ring(std::move(spec)) {}

std::optional<std::uint64_t> RationalField::size() const { return std::nullopt; }

RingElement RationalField::make(BigRational v) const {
    return RingElement(shared_from_this(), std::move(v));
}

RingElement RationalField::zero() const { return make(BigRational(0)); }
RingElement RationalField::one_impl() const { return make(BigRational(1)); }

RingElement RationalField::add(const RingElement& a, const RingElement& b) const {
    return make(a.rational() + b.rational());
}
RingElement RationalField::neg(const RingElement& a) const { return make(-a.rational()); }
RingElement RationalField::mul(const RingElement& a, const RingElement& b) const {
    return make(a.rational() * b.rational());
}

std::vector<RingElement> RationalField::spanning_set() const {
    return {make(BigRational(1)), make(BigRational(1, 2)), make(BigRational(-3))};
}

RingElement RationalField::random_element(SplitMix64& rng) const {
    const std::int64_t num = rng.range(-12, 12);
    const std::int64_t den = rng.range(1, 9);
    return make(BigRational(num, den));
}

RingPtr RationalField::scalar_field() const { return shared_from_this(); }

RingElement RationalField::scalar_mul(const RingElement& s, const RingElement& a) const {
    return mul(s, a);
}

RingElement RationalField::from_integer(const BigInt& n) const { return make(BigRational(n)); }

std::optional<RingElement> RationalField::try_inverse(const RingElement& a) const {
    if (a.rational() == 0) return std::nullopt;
    return make(1 / a.rational());
}

std::vector<RingElement> RationalField::enumerate_impl() const {
    throw UnsupportedOperation("Q is not enumerable");
}

// ---------------------------------------------------------------------------
// TruncatedPolyRing: base[y]/(y^N)

TruncatedPolyRing::TruncatedPolyRing(RingSpec spec, RingPtr base)
    : Ring(std::move(spec)), base_(std::move(base)), n_(spec_.param) {}

std::optional<std::uint64_t> TruncatedPolyRing::size() const {
    return pow_size(base_->size(), n_);
}

RingElement TruncatedPolyRing::make(Children coeffs) const {
    return RingElement(shared_from_this(), std::move(coeffs));
}

RingElement TruncatedPolyRing::zero() const { return make(Children(n_, base_->zero())); }

RingElement TruncatedPolyRing::one_impl() const {
    Children c(n_, base_->zero());
    c[0] = base_->one();
    return make(std::move(c));
}

RingElement TruncatedPolyRing::add(const RingElement& a, const RingElement& b) const {
    Children c;
    c.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        c.push_back(base_->add(a.children()[i], b.children()[i]));
    }
    return make(std::move(c));
}

RingElement TruncatedPolyRing::neg(const RingElement& a) const {
    Children c;
    c.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) c.push_back(base_->neg(a.children()[i]));
    return make(std::move(c));
}

RingElement TruncatedPolyRing::mul(const RingElement& a, const RingElement& b) const {
    // convolution under the rewrite rule y^N = 0
    Children c(n_, base_->zero());
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (base_->is_zero(a.children()[i])) continue;
        for (std::uint32_t j = 0; i + j < n_; ++j) {
            c[i + j] = base_->add(c[i + j], base_->mul(a.children()[i], b.children()[j]));
        }
    }
    return make(std::move(c));
}

std::vector<RingElement> TruncatedPolyRing::spanning_set() const {
    std::vector<RingElement> out;
    for (const RingElement& b : base_->spanning_set()) {
        for (std::uint32_t j = 0; j < n_; ++j) out.push_back(monomial(b, j));
    }
    return out;
}

RingElement TruncatedPolyRing::monomial(const RingElement& base_coeff, std::uint32_t j) const {
    Children c(n_, base_->zero());
    if (j < n_) c[j] = base_coeff;
    return make(std::move(c));
}

RingElement TruncatedPolyRing::random_element(SplitMix64& rng) const {
    Children c;
    c.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) c.push_back(base_->random_element(rng));
    return make(std::move(c));
}

RingPtr TruncatedPolyRing::scalar_field() const {
    if (field_kind(base_->kind())) return base_;
    return base_->scalar_field();
}

RingElement TruncatedPolyRing::scalar_mul(const RingElement& s, const RingElement& a) const {
    const RingPtr f = scalar_field();
    if (!f) return Ring::scalar_mul(s, a);
    const bool direct = f->signature() == base_->signature();
    Children c;
    c.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        c.push_back(direct ? base_->mul(s, a.children()[i])
                           : base_->scalar_mul(s, a.children()[i]));
    }
    return make(std::move(c));
}

RingElement TruncatedPolyRing::from_integer(const BigInt& v) const {
    Children c(n_, base_->zero());
    c[0] = base_->from_integer(v);
    return make(std::move(c));
}

std::optional<RingElement> TruncatedPolyRing::try_inverse(const RingElement& a) const {
    // unit iff the constant term is one: a = c + w with w nilpotent, so
    // a^{-1} = (sum_{i<N} (-c^{-1} w)^i) c^{-1}
    auto c0_inv = base_->try_inverse(a.children()[0]);
    if (!c0_inv) return std::nullopt;
    const RingElement cinv = monomial(*c0_inv, 0);
    const RingElement w = sub(a, monomial(a.children()[0], 0));
    const RingElement t = neg(mul(cinv, w));
    RingElement series = one_impl();
    RingElement tp = t;
    for (std::uint32_t i = 1; i < n_; ++i) {
        series = add(series, tp);
        tp = mul(tp, t);
    }
    return mul(series, cinv);
}

std::vector<RingElement> TruncatedPolyRing::enumerate_impl() const {
    return enumerate_tuples(n_, base_->enumerate(),
                            [this](Children c) { return make(std::move(c)); });
}

// ---------------------------------------------------------------------------
// MatrixRing: full / upper / strictly upper, row-major children

MatrixRing::MatrixRing(RingSpec spec, RingPtr base)
    : Ring(std::move(spec)), base_(std::move(base)), d_(spec_.param) {}

bool MatrixRing::upper() const {
    return kind() == RingKind::UpperTriangular || kind() == RingKind::StrictUpperTriangular;
}

bool MatrixRing::strict() const { return kind() == RingKind::StrictUpperTriangular; }

bool MatrixRing::slot_free(std::uint32_t i, std::uint32_t j) const {
    if (strict()) return j > i;
    if (upper()) return j >= i;
    return true;
}

std::optional<std::uint64_t> MatrixRing::size() const {
    std::uint32_t free_slots = 0;
    for (std::uint32_t i = 0; i < d_; ++i) {
        for (std::uint32_t j = 0; j < d_; ++j) {
            if (slot_free(i, j)) ++free_slots;
        }
    }
    return pow_size(base_->size(), free_slots);
}

RingElement MatrixRing::make(Children entries) const {
    return RingElement(shared_from_this(), std::move(entries));
}

RingElement MatrixRing::zero() const { return make(Children(d_ * d_, base_->zero())); }

RingElement MatrixRing::one_impl() const {
    Children c(d_ * d_, base_->zero());
    for (std::uint32_t i = 0; i < d_; ++i) c[i * d_ + i] = base_->one();
    return make(std::move(c));
}

RingElement MatrixRing::add(const RingElement& a, const RingElement& b) const {
    Children c;
    c.reserve(d_ * d_);
    for (std::uint32_t i = 0; i < d_ * d_; ++i) {
        c.push_back(base_->add(a.children()[i], b.children()[i]));
    }
    return make(std::move(c));
}

RingElement MatrixRing::neg(const RingElement& a) const {
    Children c;
    c.reserve(d_ * d_);
    for (std::uint32_t i = 0; i < d_ * d_; ++i) c.push_back(base_->neg(a.children()[i]));
    return make(std::move(c));
}

RingElement MatrixRing::mul(const RingElement& a, const RingElement& b) const {
    Children c(d_ * d_, base_->zero());
    for (std::uint32_t i = 0; i < d_; ++i) {
        for (std::uint32_t k = 0; k < d_; ++k) {
            const RingElement& aik = a.children()[i * d_ + k];
            if (base_->is_zero(aik)) continue;
            for (std::uint32_t j = 0; j < d_; ++j) {
                c[i * d_ + j] =
                    base_->add(c[i * d_ + j], base_->mul(aik, b.children()[k * d_ + j]));
            }
        }
    }
    return make(std::move(c));
}

std::vector<RingElement> MatrixRing::spanning_set() const {
    std::vector<RingElement> out;
    for (std::uint32_t i = 0; i < d_; ++i) {
        for (std::uint32_t j = 0; j < d_; ++j) {
            if (!slot_free(i, j)) continue;
            for (const RingElement& b : base_->spanning_set()) out.push_back(unit(i, j, b));
        }
    }
    return out;
}

RingElement MatrixRing::unit(std::uint32_t i, std::uint32_t j, const RingElement& b) const {
    Children c(d_ * d_, base_->zero());
    c[i * d_ + j] = b;
    return make(std::move(c));
}

RingElement MatrixRing::random_element(SplitMix64& rng) const {
    Children c(d_ * d_, base_->zero());
    for (std::uint32_t i = 0; i < d_; ++i) {
        for (std::uint32_t j = 0; j < d_; ++j) {
            if (slot_free(i, j)) c[i * d_ + j] = base_->random_element(rng);
        }
    }
    return make(std::move(c));
}

RingPtr MatrixRing::scalar_field() const {
    if (field_kind(base_->kind())) return base_;
    return base_->scalar_field();
}

RingElement MatrixRing::scalar_mul(const RingElement& s, const RingElement& a) const {
    const RingPtr f = scalar_field();
    if (!f) return Ring::scalar_mul(s, a);
    const bool direct = f->signature() == base_->signature();
    Children c;
    c.reserve(d_ * d_);
    for (std::uint32_t i = 0; i < d_ * d_; ++i) {
        c.push_back(direct ? base_->mul(s, a.children()[i])
                           : base_->scalar_mul(s, a.children()[i]));
    }
    return make(std::move(c));
}

std::vector<RingElement> MatrixRing::enumerate_impl() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free_slots;
    for (std::uint32_t i = 0; i < d_; ++i) {
        for (std::uint32_t j = 0; j < d_; ++j) {
            if (slot_free(i, j)) free_slots.emplace_back(i, j);
        }
    }
    return enumerate_tuples(free_slots.size(), base_->enumerate(),
                            [this, &free_slots](Children vals) {
                                Children c(d_ * d_, base_->zero());
                                for (std::size_t s = 0; s < free_slots.size(); ++s) {
                                    auto [i, j] = free_slots[s];
                                    c[i * d_ + j] = vals[s];
                                }
                                return make(std::move(c));
                            });
}

// ---------------------------------------------------------------------------
// DirectSumShiftRing: finitely supported sequences, componentwise product

DirectSumShiftRing::DirectSumShiftRing(RingSpec spec, RingPtr base)
    : Ring(std::move(spec)), base_(std::move(base)) {}

std::optional<std::uint64_t> DirectSumShiftRing::size() const { return std::nullopt; }

RingElement DirectSumShiftRing::make(std::vector<std::int64_t> idx, Children val) const {
    SupportPayload p;
    p.indices = std::move(idx);
    p.values = std::move(val);
    return RingElement(shared_from_this(), std::move(p));
}

RingElement DirectSumShiftRing::zero() const { return make({}, {}); }

RingElement DirectSumShiftRing::one_impl() const {
    throw InternalError("direct sum over Z has no identity");
}

RingElement DirectSumShiftRing::add(const RingElement& a, const RingElement& b) const {
    const auto& sa = a.support();
    const auto& sb = b.support();
    std::vector<std::int64_t> idx;
    Children val;
    std::size_t i = 0, j = 0;
    while (i < sa.indices.size() || j < sb.indices.size()) {
        if (j >= sb.indices.size() || (i < sa.indices.size() && sa.indices[i] < sb.indices[j])) {
            idx.push_back(sa.indices[i]);
            val.push_back(sa.values[i]);
            ++i;
        } else if (i >= sa.indices.size() || sb.indices[j] < sa.indices[i]) {
            idx.push_back(sb.indices[j]);
            val.push_back(sb.values[j]);
            ++j;
        } else {
            RingElement s = base_->add(sa.values[i], sb.values[j]);
            if (!base_->is_zero(s)) {
                idx.push_back(sa.indices[i]);
                val.push_back(std::move(s));
            }
            ++i;
            ++j;
        }
    }
    return make(std::move(idx), std::move(val));
}

RingElement DirectSumShiftRing::neg(const RingElement& a) const {
    const auto& s = a.support();
    Children val;
    val.reserve(s.values.size());
    for (const auto& v : s.values) val.push_back(base_->neg(v));
    return make(s.indices, std::move(val));
}

RingElement DirectSumShiftRing::mul(const RingElement& a, const RingElement& b) const {
    const auto& sa = a.support();
    const auto& sb = b.support();
    std::vector<std::int64_t> idx;
    Children val;
    std::size_t i = 0, j = 0;
    while (i < sa.indices.size() && j < sb.indices.size()) {
        if (sa.indices[i] < sb.indices[j]) {
            ++i;
        } else if (sb.indices[j] < sa.indices[i]) {
            ++j;
        } else {
            RingElement prod = base_->mul(sa.values[i], sb.values[j]);
            if (!base_->is_zero(prod)) {
                idx.push_back(sa.indices[i]);
                val.push_back(std::move(prod));
            }
            ++i;
            ++j;
        }
    }
    return make(std::move(idx), std::move(val));
}

std::vector<RingElement> DirectSumShiftRing::spanning_set() const {
    std::vector<RingElement> out;
    for (std::int64_t i = -2; i <= 2; ++i) {
        for (const RingElement& b : base_->spanning_set()) out.push_back(component(i, b));
    }
    return out;
}

RingElement DirectSumShiftRing::component(std::int64_t index, const RingElement& value) const {
    if (base_->is_zero(value)) return zero();
    return make({index}, {value});
}

RingElement DirectSumShiftRing::make_supported(std::vector<std::int64_t> idx, Children val) const {
    std::vector<std::size_t> order(idx.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&idx](std::size_t a, std::size_t b) { return idx[a] < idx[b]; });
    std::vector<std::int64_t> nidx;
    Children nval;
    for (std::size_t s : order) {
        if (base_->is_zero(val[s])) continue;
        if (!nidx.empty() && nidx.back() == idx[s]) {
            nval.back() = base_->add(nval.back(), val[s]);
            if (base_->is_zero(nval.back())) {
                nidx.pop_back();
                nval.pop_back();
            }
            continue;
        }
        nidx.push_back(idx[s]);
        nval.push_back(val[s]);
    }
    return make(std::move(nidx), std::move(nval));
}

RingElement DirectSumShiftRing::random_element(SplitMix64& rng) const {
    const std::uint64_t entries = rng.below(4);
    std::vector<std::int64_t> idx;
    Children val;
    for (std::uint64_t e = 0; e < entries; ++e) {
        idx.push_back(rng.range(-4, 4));
        RingElement v = base_->random_element(rng);
        for (int tries = 0; base_->is_zero(v) && tries < 8; ++tries) {
            v = base_->random_element(rng);
        }
        val.push_back(std::move(v));
    }
    return make_supported(std::move(idx), std::move(val));
}

RingPtr DirectSumShiftRing::scalar_field() const { return base_->scalar_field(); }

RingElement DirectSumShiftRing::scalar_mul(const RingElement& s, const RingElement& a) const {
    const RingPtr f = scalar_field();
    if (!f) return Ring::scalar_mul(s, a);
    const auto& sp = a.support();
    std::vector<std::int64_t> idx;
    Children val;
    for (std::size_t i = 0; i < sp.indices.size(); ++i) {
        RingElement v = base_->scalar_mul(s, sp.values[i]);
        if (!base_->is_zero(v)) {
            idx.push_back(sp.indices[i]);
            val.push_back(std::move(v));
        }
    }
    return make(std::move(idx), std::move(val));
}

RingElement DirectSumShiftRing::shift(const RingElement& a, std::int64_t offset) const {
    const auto& s = a.support();
    std::vector<std::int64_t> idx;
    idx.reserve(s.indices.size());
    for (std::int64_t i : s.indices) idx.push_back(i + offset);
    return make(std::move(idx), s.values);
}

std::vector<RingElement> DirectSumShiftRing::enumerate_impl() const {
    throw UnsupportedOperation("direct sum over Z is not enumerable");
}

// ---------------------------------------------------------------------------
// DorrohRing

DorrohRing::DorrohRing(RingSpec spec, RingPtr inner, RingPtr scalar)
    : Ring(std::move(spec)), inner_(std::move(inner)), scalar_(std::move(scalar)) {}

std::optional<std::uint64_t> DorrohRing::size() const {
    auto a = inner_->size(), b = scalar_->size();
    if (!a || !b) return std::nullopt;
    if (*a != 0 && *b > (1ull << 62) / *a) return std::nullopt;
    return *a * *b;
}

RingElement DorrohRing::make(RingElement r, RingElement m) const {
    Children c;
    c.reserve(2);
    c.push_back(std::move(r));
    c.push_back(std::move(m));
    return RingElement(shared_from_this(), std::move(c));
}

RingElement DorrohRing::zero() const { return make(inner_->zero(), scalar_->zero()); }
RingElement DorrohRing::one_impl() const { return make(inner_->zero(), scalar_->one()); }

RingElement DorrohRing::add(const RingElement& a, const RingElement& b) const {
    return make(inner_->add(inner_of(a), inner_of(b)), scalar_->add(scalar_of(a), scalar_of(b)));
}

RingElement DorrohRing::neg(const RingElement& a) const {
    return make(inner_->neg(inner_of(a)), scalar_->neg(scalar_of(a)));
}

RingElement DorrohRing::mul(const RingElement& a, const RingElement& b) const {
    // (r1,m1)(r2,m2) = (r1 r2 + m2 r1 + m1 r2, m1 m2)
    RingElement r = inner_->mul(inner_of(a), inner_of(b));
    r = inner_->add(r, inner_->scalar_mul(scalar_of(b), inner_of(a)));
    r = inner_->add(r, inner_->scalar_mul(scalar_of(a), inner_of(b)));
    return make(std::move(r), scalar_->mul(scalar_of(a), scalar_of(b)));
}

std::vector<RingElement> DorrohRing::spanning_set() const {
    std::vector<RingElement> out;
    for (const RingElement& r : inner_->spanning_set()) out.push_back(embed(r));
    for (const RingElement& m : scalar_->spanning_set()) out.push_back(make(inner_->zero(), m));
    return out;
}

RingElement DorrohRing::random_element(SplitMix64& rng) const {
    return make(inner_->random_element(rng), scalar_->random_element(rng));
}

RingPtr DorrohRing::scalar_field() const { return scalar_; }

RingElement DorrohRing::scalar_mul(const RingElement& s, const RingElement& a) const {
    return make(inner_->scalar_mul(s, inner_of(a)), scalar_->mul(s, scalar_of(a)));
}

RingElement DorrohRing::embed(const RingElement& r) const { return make(r, scalar_->zero()); }

std::vector<RingElement> DorrohRing::enumerate_impl() const {
    std::vector<RingElement> out;
    for (const RingElement& r : inner_->enumerate()) {
        for (const RingElement& m : scalar_->enumerate()) out.push_back(make(r, m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// shared Ring machinery

RingElement Ring::one() const {
    if (!has_identity_) {
        throw UnsupportedOperation(describe() + " has no identity");
    }
    return one_impl();
}

std::vector<RingElement> Ring::enumerate() const {
    if (!is_enumerable()) {
        throw UnsupportedOperation(describe() + " is not enumerable (cutoff " +
                                   std::to_string(kEnumerationCutoff) + ")");
    }
    return enumerate_impl();
}

RingElement Ring::scalar_mul(const RingElement&, const RingElement&) const {
    throw UnsupportedOperation(describe() + " has no scalar field action");
}

RingElement Ring::integer_multiple(std::int64_t n, const RingElement& a) const {
    if (n == 0) return zero();
    if (n < 0) return neg(integer_multiple(-n, a));
    return repeated_add(*this, a, static_cast<std::uint64_t>(n));
}

RingElement Ring::from_integer(const BigInt& n) const {
    if (!has_identity_) throw UnsupportedOperation("from_integer needs an identity");
    const std::uint64_t c = characteristic();
    if (c == 0) {
        throw UnsupportedOperation(describe() + ": from_integer with characteristic 0");
    }
    BigInt m = n % c;
    if (m < 0) m += c;
    return integer_multiple(static_cast<std::int64_t>(m.convert_to<std::uint64_t>()), one());
}

std::optional<RingElement> Ring::try_inverse(const RingElement& a) const {
    if (!has_identity_ || !is_enumerable()) return std::nullopt;
    const RingElement e = one();
    for (const RingElement& s : enumerate()) {
        if (mul(a, s) == e && mul(s, a) == e) return s;
    }
    return std::nullopt;
}

RingElement Ring::pow(const RingElement& a, std::uint64_t e) const {
    if (e == 0) return one();
    RingElement acc = a;
    RingElement base = a;
    e -= 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

namespace {

void format_payload(const RingElement& e, std::ostringstream& out) {
    const auto& p = e.payload();
    switch (p.index()) {
        case 0: out << std::get<0>(p); break;
        case 1: out << std::get<1>(p); break;
        case 2: {
            out << '[';
            const auto& kids = std::get<2>(p);
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) out << ',';
                format_payload(kids[i], out);
            }
            out << ']';
            break;
        }
        default: {
            const auto& s = std::get<3>(p);
            out << '{';
            for (std::size_t i = 0; i < s.indices.size(); ++i) {
                if (i) out << ',';
                out << s.indices[i] << ':';
                format_payload(s.values[i], out);
            }
            out << '}';
            break;
        }
    }
}

}  // namespace

std::string Ring::format(const RingElement& a) const {
    std::ostringstream out;
    format_payload(a, out);
    return out.str();
}

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.owner()->signature() != b.owner()->signature()) {
        throw UsageError("elements of different rings: " + a.owner()->describe() + " vs " +
                         b.owner()->describe());
    }
}

RingPtr finalize_ring(std::shared_ptr<Ring> r, bool has_identity) {
    r->has_identity_ = has_identity;
    r->characteristic_ = compute_characteristic(*r);
    return r;
}

RingPtr make_ring(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::ModularInt:
            if (spec.modulus < 2 || spec.modulus > kMaxResidueModulus) {
                throw ConfigError("ModularInt modulus must be in [2, 2^20], got " +
                                  std::to_string(spec.modulus));
            }
            return finalize_ring(std::make_shared<ResidueRing>(spec), true);
        case RingKind::PrimeField:
            if (!is_prime_u64(spec.modulus)) {
                throw ConfigError(std::to_string(spec.modulus) + " is not prime");
            }
            if (spec.modulus > kMaxResidueModulus) {
                throw ConfigError("PrimeField modulus too large");
            }
            return finalize_ring(std::make_shared<ResidueRing>(spec), true);
        case RingKind::GaloisField: {
            if (!is_prime_u64(spec.modulus)) {
                throw ConfigError(std::to_string(spec.modulus) + " is not prime");
            }
            if (spec.param < 1) throw ConfigError("GaloisField degree must be >= 1");
            std::uint64_t sz = 1;
            for (std::uint32_t i = 0; i < spec.param; ++i) {
                sz *= spec.modulus;
                if (sz > kEnumerationCutoff) {
                    throw ConfigError("GaloisField order exceeds " +
                                      std::to_string(kEnumerationCutoff));
                }
            }
            return finalize_ring(std::make_shared<GaloisFieldRing>(spec), true);
        }
        case RingKind::Rational:
            return finalize_ring(std::make_shared<RationalField>(spec), true);
        case RingKind::TruncatedPoly: {
            if (spec.param < 1 || spec.param > 4096) {
                throw ConfigError("TruncatedPoly degree must be in [1, 4096]");
            }
            RingPtr base = make_ring(*spec.base);
            if (!base->has_identity()) {
                throw ConfigError("TruncatedPoly base must be unital");
            }
            return finalize_ring(std::make_shared<TruncatedPolyRing>(spec, std::move(base)), true);
        }
        case RingKind::Matrix:
        case RingKind::UpperTriangular:
        case RingKind::StrictUpperTriangular: {
            if (spec.param < 1 || spec.param > 64) {
                throw ConfigError("matrix dimension must be in [1, 64]");
            }
            RingPtr base = make_ring(*spec.base);
            if (!base->has_identity()) throw ConfigError("matrix base must be unital");
            const bool unital = spec.kind != RingKind::StrictUpperTriangular;
            return finalize_ring(std::make_shared<MatrixRing>(spec, std::move(base)), unital);
        }
        case RingKind::DirectSumShift: {
            RingPtr base = make_ring(*spec.base);
            return finalize_ring(std::make_shared<DirectSumShiftRing>(spec, std::move(base)),
                                 false);
        }
        case RingKind::Dorroh:
            return dorroh_extend(make_ring(*spec.base), make_ring(*spec.scalar));
        case RingKind::Quotient:
            throw ConfigError("Quotient rings are built from a ring and an ideal");
    }
    throw ConfigError("unknown ring kind");
}

RingPtr dorroh_extend(const RingPtr& inner, const RingPtr& scalar) {
    const RingKind sk = scalar->kind();
    if (!field_kind(sk)) {
        throw ConfigError("Dorroh scalar must be a field kind, got " +
                          std::string(ring_kind_name(sk)));
    }
    const RingPtr action = inner->scalar_field();
    if (!action || action->signature() != scalar->signature()) {
        throw ConfigError("scalar action of " + scalar->describe() + " on " + inner->describe() +
                          " is undefined");
    }
    RingSpec spec = RingSpec::dorroh(inner->spec(), scalar->spec());
    return finalize_ring(std::make_shared<DorrohRing>(std::move(spec), inner, scalar), true);
}

}  // namespace orelab
