#include "orelab/maps.hpp"

#include "orelab/element_io.hpp"
#include "orelab/error.hpp"
#include "orelab/ring_kinds.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace orelab {

RingElement Automorphism::power(std::int64_t k, const RingElement& a) const {
    RingElement out = a;
    if (k >= 0) {
        for (std::int64_t i = 0; i < k; ++i) out = apply(out);
    } else {
        for (std::int64_t i = 0; i > k; --i) out = apply_inverse(out);
    }
    return out;
}

RingElement Derivation::power(std::uint32_t k, const RingElement& a) const {
    RingElement out = a;
    for (std::uint32_t i = 0; i < k; ++i) out = apply(out);
    return out;
}

AutomorphismSpec AutomorphismSpec::scale_y(std::string f) {
    AutomorphismSpec s;
    s.action = Action::ScaleY;
    s.factor = std::move(f);
    return s;
}
AutomorphismSpec AutomorphismSpec::frobenius() {
    AutomorphismSpec s;
    s.action = Action::Frobenius;
    return s;
}
AutomorphismSpec AutomorphismSpec::shift() {
    AutomorphismSpec s;
    s.action = Action::Shift;
    return s;
}
AutomorphismSpec AutomorphismSpec::entrywise(AutomorphismSpec inner) {
    AutomorphismSpec s;
    s.action = Action::Entrywise;
    s.inner = std::make_shared<const AutomorphismSpec>(std::move(inner));
    return s;
}
AutomorphismSpec AutomorphismSpec::dorroh_lift(AutomorphismSpec inner) {
    AutomorphismSpec s;
    s.action = Action::DorrohLift;
    s.inner = std::make_shared<const AutomorphismSpec>(std::move(inner));
    return s;
}

DerivationSpec DerivationSpec::d_dy() {
    DerivationSpec s;
    s.action = Action::DDy;
    return s;
}
DerivationSpec DerivationSpec::q_difference() {
    DerivationSpec s;
    s.action = Action::QDifference;
    return s;
}
DerivationSpec DerivationSpec::dorroh_lift(DerivationSpec inner) {
    DerivationSpec s;
    s.action = Action::DorrohLift;
    s.inner = std::make_shared<const DerivationSpec>(std::move(inner));
    return s;
}

namespace {

class IdentityAuto final : public Automorphism {
public:
    explicit IdentityAuto(RingPtr ring) : Automorphism(std::move(ring)) {}
    RingElement apply(const RingElement& a) const override { return a; }
    RingElement apply_inverse(const RingElement& a) const override { return a; }
    std::string describe() const override { return "identity"; }
};

/// y -> q y on base[y]/(y^N): coefficient i picks up q^i.
class ScaleYAuto final : public Automorphism {
public:
    ScaleYAuto(RingPtr ring, RingElement q, RingElement q_inv)
        : Automorphism(std::move(ring)),
          poly_(static_cast<const TruncatedPolyRing*>(ring_.get())),
          q_(std::move(q)),
          q_inv_(std::move(q_inv)) {}

    RingElement apply(const RingElement& a) const override { return scale(a, q_); }
    RingElement apply_inverse(const RingElement& a) const override { return scale(a, q_inv_); }
    std::string describe() const override { return "y -> " + q_.owner()->format(q_) + "*y"; }

private:
    RingElement scale(const RingElement& a, const RingElement& c) const {
        const RingPtr& base = poly_->base();
        const bool direct = c.owner()->signature() == base->signature();
        std::vector<RingElement> out;
        out.reserve(a.children().size());
        RingElement cp = c.owner()->one();
        for (std::size_t i = 0; i < a.children().size(); ++i) {
            if (i > 0) cp = c.owner()->mul(cp, c);
            out.push_back(direct ? base->mul(cp, a.children()[i])
                                 : base->scalar_mul(cp, a.children()[i]));
        }
        return poly_->make(std::move(out));
    }

    const TruncatedPolyRing* poly_;
    RingElement q_;
    RingElement q_inv_;
};

/// a -> a^p directly on a Galois field, or coefficientwise over one.
class FrobeniusAuto final : public Automorphism {
public:
    explicit FrobeniusAuto(RingPtr ring) : Automorphism(std::move(ring)) {
        if (ring_->kind() == RingKind::GaloisField) {
            gf_ = static_cast<const GaloisFieldRing*>(ring_.get());
        } else {
            poly_ = static_cast<const TruncatedPolyRing*>(ring_.get());
            gf_ = static_cast<const GaloisFieldRing*>(poly_->base().get());
        }
    }

    RingElement apply(const RingElement& a) const override {
        if (!poly_) return gf_->frobenius(a);
        std::vector<RingElement> out;
        out.reserve(a.children().size());
        for (const auto& c : a.children()) out.push_back(gf_->frobenius(c));
        return poly_->make(std::move(out));
    }
    RingElement apply_inverse(const RingElement& a) const override {
        if (!poly_) return gf_->frobenius_inverse(a);
        std::vector<RingElement> out;
        out.reserve(a.children().size());
        for (const auto& c : a.children()) out.push_back(gf_->frobenius_inverse(c));
        return poly_->make(std::move(out));
    }
    std::string describe() const override { return "coefficient Frobenius"; }

private:
    const GaloisFieldRing* gf_ = nullptr;
    const TruncatedPolyRing* poly_ = nullptr;
};

/// sigma(sum a_i)_i = a_{i-1}: support translates by +1.
class ShiftAuto final : public Automorphism {
public:
    explicit ShiftAuto(RingPtr ring)
        : Automorphism(std::move(ring)),
          ds_(static_cast<const DirectSumShiftRing*>(ring_.get())) {}

    RingElement apply(const RingElement& a) const override { return ds_->shift(a, 1); }
    RingElement apply_inverse(const RingElement& a) const override { return ds_->shift(a, -1); }
    std::string describe() const override { return "index shift"; }

private:
    const DirectSumShiftRing* ds_;
};

class EntrywiseAuto final : public Automorphism {
public:
    EntrywiseAuto(RingPtr ring, AutoPtr inner)
        : Automorphism(std::move(ring)), inner_(std::move(inner)) {}

    RingElement apply(const RingElement& a) const override { return map(a, false); }
    RingElement apply_inverse(const RingElement& a) const override { return map(a, true); }
    std::string describe() const override { return "entrywise " + inner_->describe(); }

private:
    RingElement map(const RingElement& a, bool inv) const {
        auto f = [&](const RingElement& e) {
            return inv ? inner_->apply_inverse(e) : inner_->apply(e);
        };
        if (ring_->kind() == RingKind::DirectSumShift) {
            const auto* ds = static_cast<const DirectSumShiftRing*>(ring_.get());
            const auto& s = a.support();
            std::vector<RingElement> vals;
            vals.reserve(s.values.size());
            for (const auto& v : s.values) vals.push_back(f(v));
            return ds->make_supported(s.indices, std::move(vals));
        }
        std::vector<RingElement> out;
        out.reserve(a.children().size());
        for (const auto& c : a.children()) out.push_back(f(c));
        if (ring_->kind() == RingKind::TruncatedPoly) {
            return static_cast<const TruncatedPolyRing*>(ring_.get())->make(std::move(out));
        }
        return static_cast<const MatrixRing*>(ring_.get())->make(std::move(out));
    }

    AutoPtr inner_;
};

/// (r, m) -> (inner(r), m).
class DorrohLiftAuto final : public Automorphism {
public:
    DorrohLiftAuto(RingPtr ring, AutoPtr inner)
        : Automorphism(std::move(ring)),
          dr_(static_cast<const DorrohRing*>(ring_.get())),
          inner_(std::move(inner)) {}

    RingElement apply(const RingElement& a) const override {
        return dr_->make(inner_->apply(dr_->inner_of(a)), dr_->scalar_of(a));
    }
    RingElement apply_inverse(const RingElement& a) const override {
        return dr_->make(inner_->apply_inverse(dr_->inner_of(a)), dr_->scalar_of(a));
    }
    std::string describe() const override { return "Dorroh lift of " + inner_->describe(); }

    const AutoPtr& inner() const { return inner_; }

private:
    const DorrohRing* dr_;
    AutoPtr inner_;
};

class ZeroDeriv final : public Derivation {
public:
    ZeroDeriv(RingPtr ring, AutoPtr sigma) : Derivation(std::move(ring), std::move(sigma)) {}
    RingElement apply(const RingElement&) const override { return ring_->zero(); }
    std::string describe() const override { return "zero"; }
};

/// Formal d/dy, independent of sigma.
class DDyDeriv final : public Derivation {
public:
    DDyDeriv(RingPtr ring, AutoPtr sigma)
        : Derivation(std::move(ring), std::move(sigma)),
          poly_(static_cast<const TruncatedPolyRing*>(ring_.get())) {}

    RingElement apply(const RingElement& a) const override {
        const RingPtr& base = poly_->base();
        const std::size_t n = a.children().size();
        std::vector<RingElement> out(n, base->zero());
        for (std::size_t i = 1; i < n; ++i) {
            out[i - 1] = base->integer_multiple(static_cast<std::int64_t>(i), a.children()[i]);
        }
        return poly_->make(std::move(out));
    }
    std::string describe() const override { return "d/dy"; }

private:
    const TruncatedPolyRing* poly_;
};

/// D(y) = 1 extended by D(y^i) = sigma(y) D(y^{i-1}) + y^{i-1} and
/// D(c y^i) = sigma(c) D(y^i) for constants c.
class QDifferenceDeriv final : public Derivation {
public:
    QDifferenceDeriv(RingPtr ring, AutoPtr sigma)
        : Derivation(std::move(ring), std::move(sigma)),
          poly_(static_cast<const TruncatedPolyRing*>(ring_.get())) {
        const std::uint32_t n = poly_->truncation();
        const RingElement y = poly_->monomial(poly_->base()->one(), 1);
        const RingElement sy = sigma_->apply(y);
        dy_powers_.push_back(poly_->zero());  // D(1) = 0
        RingElement ypow = poly_->one();      // y^{i-1} along the recursion
        for (std::uint32_t i = 1; i < n; ++i) {
            dy_powers_.push_back(poly_->add(poly_->mul(sy, dy_powers_.back()), ypow));
            ypow = poly_->mul(ypow, y);
        }
    }

    RingElement apply(const RingElement& a) const override {
        RingElement out = poly_->zero();
        for (std::size_t i = 1; i < a.children().size(); ++i) {
            const RingElement& c = a.children()[i];
            if (poly_->base()->is_zero(c)) continue;
            const RingElement sc = sigma_->apply(poly_->monomial(c, 0));
            out = poly_->add(out, poly_->mul(sc, dy_powers_[i]));
        }
        return out;
    }
    std::string describe() const override { return "q-difference (D(y) = 1)"; }

private:
    const TruncatedPolyRing* poly_;
    std::vector<RingElement> dy_powers_;  // dy_powers_[i] = D(y^i)
};

/// (r, m) -> (inner(r), 0).
class DorrohLiftDeriv final : public Derivation {
public:
    DorrohLiftDeriv(RingPtr ring, AutoPtr sigma, DerivPtr inner)
        : Derivation(std::move(ring), std::move(sigma)),
          dr_(static_cast<const DorrohRing*>(ring_.get())),
          inner_(std::move(inner)) {}

    RingElement apply(const RingElement& a) const override {
        return dr_->make(inner_->apply(dr_->inner_of(a)), dr_->scalar_field()->zero());
    }
    std::string describe() const override { return "Dorroh lift of " + inner_->describe(); }

private:
    const DorrohRing* dr_;
    DerivPtr inner_;
};

bool has_children_entries(RingKind k) {
    return k == RingKind::TruncatedPoly || k == RingKind::Matrix ||
           k == RingKind::UpperTriangular || k == RingKind::StrictUpperTriangular ||
           k == RingKind::DirectSumShift;
}

}  // namespace

AutoPtr build_automorphism(const RingPtr& ring, const AutomorphismSpec& spec) {
    switch (spec.action) {
        case AutomorphismSpec::Action::Identity:
            return std::make_shared<IdentityAuto>(ring);
        case AutomorphismSpec::Action::ScaleY: {
            if (ring->kind() != RingKind::TruncatedPoly) {
                throw ConfigError("scale_y needs a truncated polynomial ring, got " +
                                  ring->describe());
            }
            const RingPtr field = ring->scalar_field();
            if (!field) {
                throw ConfigError(ring->describe() + " has no scalar field for scale_y");
            }
            RingElement q = element_from_string(field, spec.factor);
            auto q_inv = field->try_inverse(q);
            if (!q_inv) {
                throw ConfigError("scale_y factor " + field->format(q) + " is not a unit of " +
                                  field->describe());
            }
            return std::make_shared<ScaleYAuto>(ring, std::move(q), std::move(*q_inv));
        }
        case AutomorphismSpec::Action::Frobenius: {
            const bool direct = ring->kind() == RingKind::GaloisField;
            const bool lifted = ring->kind() == RingKind::TruncatedPoly &&
                                static_cast<const TruncatedPolyRing&>(*ring).base()->kind() ==
                                    RingKind::GaloisField;
            if (!direct && !lifted) {
                throw ConfigError(
                    "frobenius needs a Galois field (or coefficients in one), got " +
                    ring->describe());
            }
            return std::make_shared<FrobeniusAuto>(ring);
        }
        case AutomorphismSpec::Action::Shift:
            if (ring->kind() != RingKind::DirectSumShift) {
                throw ConfigError("shift needs a DirectSumShift ring, got " + ring->describe());
            }
            return std::make_shared<ShiftAuto>(ring);
        case AutomorphismSpec::Action::Entrywise: {
            if (!spec.inner) throw ConfigError("entrywise needs an inner action");
            if (!has_children_entries(ring->kind())) {
                throw ConfigError("entrywise does not fit " + ring->describe());
            }
            RingPtr base;
            if (ring->kind() == RingKind::TruncatedPoly) {
                base = static_cast<const TruncatedPolyRing&>(*ring).base();
            } else if (ring->kind() == RingKind::DirectSumShift) {
                base = static_cast<const DirectSumShiftRing&>(*ring).base();
            } else {
                base = static_cast<const MatrixRing&>(*ring).base();
            }
            return std::make_shared<EntrywiseAuto>(ring, build_automorphism(base, *spec.inner));
        }
        case AutomorphismSpec::Action::DorrohLift: {
            if (!spec.inner) throw ConfigError("dorroh_lift needs an inner action");
            if (ring->kind() != RingKind::Dorroh) {
                throw ConfigError("dorroh_lift needs a Dorroh ring, got " + ring->describe());
            }
            const auto& dr = static_cast<const DorrohRing&>(*ring);
            return std::make_shared<DorrohLiftAuto>(ring,
                                                    build_automorphism(dr.inner(), *spec.inner));
        }
    }
    throw ConfigError("unknown automorphism action");
}

DerivPtr build_derivation(const RingPtr& ring, const AutoPtr& sigma, const DerivationSpec& spec) {
    if (sigma->ring()->signature() != ring->signature()) {
        throw UsageError("derivation and automorphism live on different rings");
    }
    switch (spec.action) {
        case DerivationSpec::Action::Zero:
            return std::make_shared<ZeroDeriv>(ring, sigma);
        case DerivationSpec::Action::DDy:
            if (ring->kind() != RingKind::TruncatedPoly) {
                throw ConfigError("d_dy needs a truncated polynomial ring, got " +
                                  ring->describe());
            }
            return std::make_shared<DDyDeriv>(ring, sigma);
        case DerivationSpec::Action::QDifference:
            if (ring->kind() != RingKind::TruncatedPoly) {
                throw ConfigError("q_difference needs a truncated polynomial ring, got " +
                                  ring->describe());
            }
            return std::make_shared<QDifferenceDeriv>(ring, sigma);
        case DerivationSpec::Action::DorrohLift: {
            if (!spec.inner) throw ConfigError("dorroh_lift needs an inner action");
            if (ring->kind() != RingKind::Dorroh) {
                throw ConfigError("dorroh_lift needs a Dorroh ring, got " + ring->describe());
            }
            const auto& dr = static_cast<const DorrohRing&>(*ring);
            AutoPtr inner_sigma;
            if (const auto* lifted = dynamic_cast<const DorrohLiftAuto*>(sigma.get())) {
                inner_sigma = lifted->inner();
            } else if (dynamic_cast<const IdentityAuto*>(sigma.get()) != nullptr) {
                inner_sigma = std::make_shared<IdentityAuto>(dr.inner());
            } else {
                throw ConfigError(
                    "dorroh_lift derivation needs a lifted (or identity) automorphism");
            }
            return std::make_shared<DorrohLiftDeriv>(
                ring, sigma, build_derivation(dr.inner(), inner_sigma, *spec.inner));
        }
    }
    throw ConfigError("unknown derivation action");
}

AutoPtr dorroh_lift_automorphism(const RingPtr& dorroh_ring, AutoPtr inner) {
    if (dorroh_ring->kind() != RingKind::Dorroh) {
        throw UsageError("dorroh_lift_automorphism needs a Dorroh ring");
    }
    const auto& dr = static_cast<const DorrohRing&>(*dorroh_ring);
    if (inner->ring()->signature() != dr.inner()->signature()) {
        throw UsageError("inner automorphism lives on " + inner->ring()->describe() +
                         ", expected " + dr.inner()->describe());
    }
    return std::make_shared<DorrohLiftAuto>(dorroh_ring, std::move(inner));
}

DerivPtr dorroh_lift_derivation(const RingPtr& dorroh_ring, AutoPtr lifted_sigma, DerivPtr inner) {
    if (dorroh_ring->kind() != RingKind::Dorroh) {
        throw UsageError("dorroh_lift_derivation needs a Dorroh ring");
    }
    const auto& dr = static_cast<const DorrohRing&>(*dorroh_ring);
    if (inner->ring()->signature() != dr.inner()->signature()) {
        throw UsageError("inner derivation lives on " + inner->ring()->describe() +
                         ", expected " + dr.inner()->describe());
    }
    return std::make_shared<DorrohLiftDeriv>(dorroh_ring, std::move(lifted_sigma),
                                             std::move(inner));
}

std::optional<int> torsion_order(const Automorphism& sigma, const RingElement& a, int bound) {
    if (bound < 1) throw UsageError("torsion bound must be >= 1");
    RingElement x = a;
    for (int n = 1; n <= bound; ++n) {
        x = sigma.apply(x);
        if (x == a) return n;
    }
    return std::nullopt;
}

std::optional<int> nilpotence_order(const Derivation& d, const RingElement& a, int bound) {
    if (bound < 1) throw UsageError("nilpotence bound must be >= 1");
    RingElement x = a;
    const Ring& R = *d.ring();
    for (int m = 1; m <= bound; ++m) {
        x = d.apply(x);
        if (R.is_zero(x)) return m;
    }
    return std::nullopt;
}

std::optional<int> spanning_torsion_bound(const Automorphism& sigma, int bound) {
    int max_order = 1;
    for (const RingElement& s : sigma.ring()->spanning_set()) {
        const auto o = torsion_order(sigma, s, bound);
        if (!o) return std::nullopt;
        max_order = std::max(max_order, *o);
    }
    return max_order;
}

}  // namespace orelab
