#pragma once

#include "orelab/ideal.hpp"
#include "orelab/ore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orelab {

struct RadicalBounds {
    int degree = 512;  // partial sums are abandoned beyond this degree
    int terms = 64;    // Neumann terms examined before giving up
};

/// Outcome of a bounded quasi-inverse search. Found is exact and two-sided
/// (re-verified before returning); DivergentBeyond is only absence of
/// evidence within the bounds; Refuted is a proof that no inverse exists.
struct QuasiInverseResult {
    enum class Status { Found, DivergentBeyond, Refuted };

    Status status = Status::DivergentBeyond;
    std::optional<OrePoly> inverse;  // Found
    int bound = 0;                   // DivergentBeyond: the bound that was hit
    std::string note;                // which bound, or the refutation witness
    int partial_sums_checked = 0;

    bool found() const { return status == Status::Found; }
};

/// Partial sums sum_{i=1..K} (-f)^i until they stabilize (the next power
/// vanishes), the term bound runs out, or the degree bound is exceeded.
QuasiInverseResult neumann_quasi_inverse(const OrePoly& f, const RadicalBounds& bounds = {});

/// sum_{i=1..v-1} (-a)^i x^{ik} for nilpotent a of index v with
/// x^k a = a x^k; verified two-sided before returning. Preconditions are
/// errors: non-nilpotent a is refused, a commutation failure carries a witness.
OrePoly geometric_quasi_inverse(const RingElement& a, int k, const OreContextPtr& ctx);

/// Does x^{m p^m} commute with a? Preconditions (prime characteristic,
/// sigma D = D sigma, sigma^m(a) = a, D^{p^m}(a) = 0) are reported
/// individually as PreconditionError; the commutation itself is the check.
CheckResult check_central_commutation(const RingElement& a, int m, const OreContextPtr& ctx);

struct EquationStatus {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct EquationReport {
    std::vector<EquationStatus> equations;

    bool all_ok() const {
        for (const auto& e : equations) {
            if (!e.ok) return false;
        }
        return true;
    }
};

/// Coefficient equations satisfied by a quasi-inverse f = sum b_i x^i of
/// a·x^n when sigma^n(a) = a: vanishing of b_0..b_{n-1}, the top equation
/// b_m sigma^m(a) = 0 (e2), the word-sum families (e3)/(e4), and the x^n
/// equation b_n + a + sum b_i D^i(a) = 0 (e5). Word sums are evaluated
/// through word_expansion, independently of the multiplication that built f.
EquationReport thm31_equation_check(const RingElement& a, int n, const OrePoly& f);

/// The inductive witness chain: r_j, finite products of sigma-orbit elements
/// of a, with b_{m-j}·r_j in the nilradical, followed by the closing product
/// membership a·r_{m-n}···r_0 in N. Requires a finite coefficient ring and
/// a + N central in R/N.
struct WitnessChain {
    std::vector<RingElement> chain;  // r_0 .. r_{m-n}
    std::vector<EquationStatus> steps;
    bool final_in_nilradical = false;
    bool cap_bound = false;  // the 64-factor product-length cap was hit

    bool ok() const {
        if (!final_in_nilradical || cap_bound) return false;
        for (const auto& s : steps) {
            if (!s.ok) return false;
        }
        return true;
    }
};

/// With exhaustive_fallback, a failing deterministic step falls back to a
/// scan of the product semigroup generated by the sigma-orbit of a.
WitnessChain thm31_witness_chain(const RingElement& a, int n, const OrePoly& f,
                                 bool exhaustive_fallback = false);

/// Is (a·x·f_1)(a·x·f_2)···(a·x·f_t) = 0? The context must be a shift ring:
/// DirectSumShift coefficients, index-shift sigma, zero derivation.
CheckResult example35_check(const RingElement& a, const std::vector<OrePoly>& factors);

struct ISetEvidence {
    RingElement element;
    int terms = 0;           // Neumann terms until stabilization
    int inverse_degree = 0;  // degree of the verified quasi-inverse of r·x
};

/// Bounded semi-decision for I = {r : r·x has a terminating Neumann series}.
/// Membership claims carry concrete verified inverses; non-membership is
/// never claimed, only absence of evidence within the bounds.
struct ISetReport {
    std::vector<ISetEvidence> candidates;
    int probed = 0;           // how many elements membership was attempted for
    bool exhaustive = false;  // full ring scan vs sampled
    CheckResult ideal_check;
    CheckResult sigma_invariance;
    CheckResult d_stability;
    std::string i0_description;

    bool contains(const RingElement& r) const;
    bool stable() const { return ideal_check.ok && sigma_invariance.ok && d_stability.ok; }
};

ISetReport i_set_explore(const OreContextPtr& ctx, const RadicalBounds& bounds = {},
                         int samples = 32, std::uint64_t seed = 0);

}  // namespace orelab
