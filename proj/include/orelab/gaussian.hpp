#pragma once

#include "orelab/numeric.hpp"
#include "orelab/ring.hpp"

#include <vector>

namespace orelab {

/// Polynomial in t with integer coefficients; index i = coefficient of t^i.
using IntPoly = std::vector<BigInt>;

/// Gaussian binomial polynomials C(k,j)_t built by the twisted Pascal
/// recursion C(k,j)_t = C(k-1,j-1)_t + t^j · C(k-1,j)_t. The polynomial form
/// is total — unlike the quotient of q-factorials it never divides by zero at
/// roots of unity — and evaluations reduce into the scalar field afterwards.
class GaussianTable {
public:
    explicit GaussianTable(int max_k);

    int max_k() const { return max_k_; }

    /// Requires 0 <= j <= k <= max_k.
    const IntPoly& poly(int k, int j) const;

    /// Zero polynomial outside the triangle, per the boundary convention.
    IntPoly poly_or_zero(int k, int j) const;

    /// Evaluation at t = 1: the ordinary binomial coefficient.
    BigInt eval_at_one(int k, int j) const;

    /// Evaluation at t = q inside q's owner field.
    RingElement eval(int k, int j, const RingElement& q) const;

private:
    int max_k_;
    std::vector<std::vector<IntPoly>> rows_;  // rows_[k][j]
};

/// C(k,j)_t evaluated at q, via a thread-local table grown on demand.
/// Out-of-range indices are a usage error.
RingElement q_binomial(int k, int j, const RingElement& q);

/// Integer binomial via the same table (t = 1).
BigInt binomial(int k, int j);

}  // namespace orelab
