#include "orelab/ideal.hpp"

#include "orelab/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace orelab {

namespace {

using ElementSet = std::set<RingElement, ElementLess>;

std::vector<RingElement> to_sorted_vector(const ElementSet& s) {
    return std::vector<RingElement>(s.begin(), s.end());
}

bool sorted_contains(const std::vector<RingElement>& v, const RingElement& a) {
    return std::binary_search(v.begin(), v.end(), a, ElementLess{});
}

/// Is (r, s) a two-sided quasi-inverse pair: r + s + rs = 0 = r + s + sr?
bool quasi_pair(const Ring& R, const RingElement& r, const RingElement& s) {
    const RingElement rs_sum = R.add(r, s);
    if (!R.is_zero(R.add(rs_sum, R.mul(r, s)))) return false;
    return R.is_zero(R.add(rs_sum, R.mul(s, r)));
}

}  // namespace

Ideal::Ideal(RingPtr owner, std::vector<RingElement> elements)
    : owner_(std::move(owner)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), ElementLess{});
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty() || !sorted_contains(elements_, owner_->zero())) {
        elements_.push_back(owner_->zero());
        std::sort(elements_.begin(), elements_.end(), ElementLess{});
    }
}

bool Ideal::contains(const RingElement& a) const { return sorted_contains(elements_, a); }

Ideal Ideal::closure(const RingPtr& ring, const std::vector<RingElement>& generators) {
    const std::vector<RingElement> all = ring->enumerate();
    ElementSet set;
    std::deque<RingElement> work;
    auto push = [&](const RingElement& e) {
        if (set.insert(e).second) work.push_back(e);
    };
    push(ring->zero());
    for (const auto& g : generators) push(g);
    while (!work.empty()) {
        RingElement x = work.front();
        work.pop_front();
        push(ring->neg(x));
        for (const auto& s : all) {
            push(ring->mul(s, x));
            push(ring->mul(x, s));
        }
        // additive closure against everything already collected
        std::vector<RingElement> snapshot(set.begin(), set.end());
        for (const auto& y : snapshot) push(ring->add(x, y));
    }
    return Ideal(ring, to_sorted_vector(set));
}

std::optional<std::pair<RingElement, RingElement>> Ideal::verify() const {
    for (const auto& a : elements_) {
        if (!contains(owner_->neg(a))) return std::make_pair(a, a);
        for (const auto& b : elements_) {
            if (!contains(owner_->add(a, b))) return std::make_pair(a, b);
        }
    }
    for (const auto& r : owner_->enumerate()) {
        for (const auto& a : elements_) {
            if (!contains(owner_->mul(r, a)) || !contains(owner_->mul(a, r))) {
                return std::make_pair(r, a);
            }
        }
    }
    return std::nullopt;
}

std::string Ideal::format() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out << ", ";
        out << owner_->format(elements_[i]);
    }
    out << '}';
    return out.str();
}

std::optional<RingElement> quasi_inverse_elem(const RingElement& r) {
    const Ring& R = *r.owner();
    if (!R.is_enumerable()) {
        throw UnsupportedOperation("quasi_inverse_elem needs an enumerable ring, got " +
                                   R.describe());
    }
    for (const RingElement& s : R.enumerate()) {
        if (quasi_pair(R, r, s)) return s;
    }
    return std::nullopt;
}

Ideal jacobson_radical(const RingPtr& ring) {
    if (!ring->is_enumerable()) {
        throw UnsupportedOperation("jacobson_radical needs an enumerable ring, got " +
                                   ring->describe());
    }
    const std::vector<RingElement> all = ring->enumerate();

    // quasi-regular elements first
    std::vector<RingElement> quasi_regular;
    for (const auto& r : all) {
        for (const auto& s : all) {
            if (quasi_pair(*ring, r, s)) {
                quasi_regular.push_back(r);
                break;
            }
        }
    }
    std::sort(quasi_regular.begin(), quasi_regular.end(), ElementLess{});

    // J = {r : s·r and r·s quasi-regular for all s in R with adjoined identity}.
    // For unital rings the adjoined-identity view collapses into R itself;
    // otherwise (s, n) acts as s·r + n·r with n below the characteristic.
    const std::uint64_t char_span = ring->has_identity() ? 1 : std::max<std::uint64_t>(
                                                                   ring->characteristic(), 1);
    std::vector<RingElement> members;
    for (const auto& r : all) {
        bool ok = true;
        for (std::uint64_t n = 0; ok && n < char_span; ++n) {
            const RingElement nr =
                ring->integer_multiple(static_cast<std::int64_t>(n), r);
            for (const auto& s : all) {
                if (!sorted_contains(quasi_regular, ring->add(ring->mul(s, r), nr)) ||
                    !sorted_contains(quasi_regular, ring->add(ring->mul(r, s), nr))) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) members.push_back(r);
    }
    Ideal result(ring, std::move(members));
    if (auto witness = result.verify()) {
        throw InternalError("jacobson_radical produced a non-ideal on " + ring->describe() +
                            ", witness (" + ring->format(witness->first) + ", " +
                            ring->format(witness->second) + ")");
    }
    return result;
}

bool is_nilpotent(const RingElement& a) { return nilpotence_index(a).has_value(); }

std::optional<std::uint64_t> nilpotence_index(const RingElement& a) {
    const Ring& R = *a.owner();
    const std::uint64_t bound = R.size().value_or(64);
    RingElement p = a;
    for (std::uint64_t v = 1; v <= bound; ++v) {
        if (R.is_zero(p)) return v;
        p = R.mul(p, a);
    }
    return std::nullopt;
}

Ideal nilradical(const RingPtr& ring) {
    if (!ring->is_enumerable()) {
        throw UnsupportedOperation("nilradical needs an enumerable ring, got " +
                                   ring->describe());
    }
    const std::vector<RingElement> all = ring->enumerate();

    // elements generating nil ideals
    std::vector<RingElement> seeds;
    for (const auto& r : all) {
        const Ideal generated = Ideal::closure(ring, {r});
        const bool nil = std::all_of(generated.elements().begin(), generated.elements().end(),
                                     [](const RingElement& e) { return is_nilpotent(e); });
        if (nil) seeds.push_back(r);
    }

    // close under addition, then re-verify the result is a nil ideal
    ElementSet set(seeds.begin(), seeds.end());
    set.insert(ring->zero());
    std::deque<RingElement> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        RingElement x = work.front();
        work.pop_front();
        std::vector<RingElement> snapshot(set.begin(), set.end());
        for (const auto& y : snapshot) {
            RingElement s = ring->add(x, y);
            if (set.insert(s).second) work.push_back(s);
        }
    }
    Ideal result(ring, to_sorted_vector(set));
    if (auto witness = result.verify()) {
        throw InternalError("nilradical produced a non-ideal on " + ring->describe());
    }
    for (const auto& e : result.elements()) {
        if (!is_nilpotent(e)) {
            throw InternalError("nilradical contains a non-nilpotent element " +
                                ring->format(e) + " on " + ring->describe());
        }
    }
    return result;
}

std::vector<RingElement> center(const RingPtr& ring) {
    if (!ring->is_enumerable()) {
        throw UnsupportedOperation("center needs an enumerable ring, got " + ring->describe());
    }
    const std::vector<RingElement> all = ring->enumerate();
    std::vector<RingElement> out;
    for (const auto& z : all) {
        bool central = true;
        for (const auto& r : all) {
            if (ring->mul(z, r) != ring->mul(r, z)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(z);
    }
    std::sort(out.begin(), out.end(), ElementLess{});
    return out;
}

// ---------------------------------------------------------------------------
// quotient rings

namespace {

class QuotientRing final : public Ring {
public:
    QuotientRing(RingPtr base, Ideal ideal, std::vector<RingElement> reps,
                 std::map<RingElement, std::size_t, ElementLess> coset_of)
        : Ring([&] {
              RingSpec s;
              s.kind = RingKind::Quotient;
              s.base = std::make_shared<const RingSpec>(base->spec());
              return s;
          }()),
          base_(std::move(base)),
          ideal_(std::move(ideal)),
          reps_(std::move(reps)),
          coset_of_(std::move(coset_of)) {
        signature_ = base_->signature() + "/" + ideal_.format();
    }

    /// Runs after the shared_ptr owns the object (wrap needs shared_from_this):
    /// the coset of 1 for a unital base, otherwise a search over representatives.
    void detect_identity() {
        if (base_->has_identity()) {
            identity_ = project_base(base_->one());
            return;
        }
        for (const auto& e : reps_) {
            bool unit = true;
            for (const auto& r : reps_) {
                const RingElement re = wrap(r);
                const RingElement ee = wrap(e);
                if (mul(ee, re) != re || mul(re, ee) != re) {
                    unit = false;
                    break;
                }
            }
            if (unit) {
                identity_ = wrap(e);
                return;
            }
        }
    }

    bool found_identity() const { return identity_.has_value(); }

    std::optional<std::uint64_t> size() const override { return reps_.size(); }

    RingElement zero() const override { return project_base(base_->zero()); }

    RingElement add(const RingElement& a, const RingElement& b) const override {
        return project_base(base_->add(lift(a), lift(b)));
    }
    RingElement neg(const RingElement& a) const override {
        return project_base(base_->neg(lift(a)));
    }
    RingElement mul(const RingElement& a, const RingElement& b) const override {
        return project_base(base_->mul(lift(a), lift(b)));
    }

    std::vector<RingElement> spanning_set() const override {
        std::vector<RingElement> out;
        for (const auto& s : base_->spanning_set()) out.push_back(project_base(s));
        return out;
    }

    RingElement random_element(SplitMix64& rng) const override {
        return wrap(reps_[rng.below(reps_.size())]);
    }

    RingElement project_base(const RingElement& e) const {
        auto it = coset_of_.find(e);
        if (it == coset_of_.end()) {
            throw UsageError("element is not in the base ring of this quotient");
        }
        return wrap(reps_[it->second]);
    }

    static const RingElement& lift(const RingElement& a) { return a.children()[0]; }

protected:
    RingElement one_impl() const override {
        if (!identity_) throw InternalError("quotient has no identity");
        return *identity_;
    }

    std::vector<RingElement> enumerate_impl() const override {
        std::vector<RingElement> out;
        out.reserve(reps_.size());
        for (const auto& r : reps_) out.push_back(wrap(r));
        return out;
    }

private:
    RingElement wrap(const RingElement& rep) const {
        return RingElement(shared_from_this(), std::vector<RingElement>{rep});
    }

    RingPtr base_;
    Ideal ideal_;
    std::vector<RingElement> reps_;  // canonical: first of each coset in enumeration order
    std::map<RingElement, std::size_t, ElementLess> coset_of_;
    std::optional<RingElement> identity_;
};

}  // namespace

RingPtr quotient(const RingPtr& ring, const Ideal& ideal) {
    if (!ring->is_enumerable()) {
        throw UnsupportedOperation("quotient needs an enumerable ring, got " + ring->describe());
    }
    if (ideal.owner()->signature() != ring->signature()) {
        throw UsageError("ideal belongs to " + ideal.owner()->describe() + ", not " +
                         ring->describe());
    }
    if (auto witness = ideal.verify()) {
        throw PreconditionError("not an ideal of " + ring->describe(),
                                "(" + ring->format(witness->first) + ", " +
                                    ring->format(witness->second) + ")");
    }
    std::vector<RingElement> reps;
    std::map<RingElement, std::size_t, ElementLess> coset_of;
    for (const auto& e : ring->enumerate()) {
        std::size_t found = reps.size();
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (ideal.contains(ring->sub(e, reps[i]))) {
                found = i;
                break;
            }
        }
        if (found == reps.size()) reps.push_back(e);
        coset_of.emplace(e, found);
    }
    auto q = std::make_shared<QuotientRing>(ring, ideal, std::move(reps), std::move(coset_of));
    q->detect_identity();
    return finalize_ring(q, q->found_identity());
}

RingElement quotient_project(const RingPtr& q, const RingElement& base_elem) {
    const auto* qr = dynamic_cast<const QuotientRing*>(q.get());
    if (qr == nullptr) throw UsageError("quotient_project needs a quotient ring");
    return qr->project_base(base_elem);
}

const RingElement& quotient_lift(const RingElement& q_elem) {
    if (q_elem.owner()->kind() != RingKind::Quotient) {
        throw UsageError("quotient_lift needs a quotient ring element");
    }
    return QuotientRing::lift(q_elem);
}

}  // namespace orelab
