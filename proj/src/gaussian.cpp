#include "orelab/gaussian.hpp"

#include "orelab/error.hpp"

#include <memory>

namespace orelab {

namespace {

IntPoly add_shifted(const IntPoly& a, const IntPoly& b, int shift) {
    // a + t^shift * b
    IntPoly out(std::max(a.size(), b.size() + shift), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i + shift] += b[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

GaussianTable::GaussianTable(int max_k) : max_k_(max_k) {
    if (max_k < 0) throw UsageError("GaussianTable needs max_k >= 0");
    rows_.resize(max_k + 1);
    rows_[0] = {IntPoly{BigInt(1)}};
    for (int k = 1; k <= max_k; ++k) {
        rows_[k].resize(k + 1);
        rows_[k][0] = IntPoly{BigInt(1)};
        rows_[k][k] = IntPoly{BigInt(1)};
        for (int j = 1; j < k; ++j) {
            rows_[k][j] = add_shifted(rows_[k - 1][j - 1], rows_[k - 1][j], j);
        }
    }
}

const IntPoly& GaussianTable::poly(int k, int j) const {
    if (k < 0 || k > max_k_ || j < 0 || j > k) {
        throw UsageError("Gaussian index (" + std::to_string(k) + ", " + std::to_string(j) +
                         ") out of range for max_k = " + std::to_string(max_k_));
    }
    return rows_[k][j];
}

IntPoly GaussianTable::poly_or_zero(int k, int j) const {
    if (j < 0 || j > k) return {};
    return poly(k, j);
}

BigInt GaussianTable::eval_at_one(int k, int j) const {
    BigInt s = 0;
    for (const auto& c : poly(k, j)) s += c;
    return s;
}

RingElement GaussianTable::eval(int k, int j, const RingElement& q) const {
    const IntPoly& p = poly(k, j);
    const Ring& F = *q.owner();
    RingElement acc = F.zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = F.add(F.mul(acc, q), F.from_integer(*it));
    }
    return acc;
}

namespace {

const GaussianTable& shared_table(int k) {
    thread_local std::unique_ptr<GaussianTable> table;
    if (!table || table->max_k() < k) {
        table = std::make_unique<GaussianTable>(std::max(k, 16));
    }
    return *table;
}

}  // namespace

RingElement q_binomial(int k, int j, const RingElement& q) {
    if (k < 0 || j < 0 || j > k) {
        throw UsageError("q_binomial index (" + std::to_string(k) + ", " + std::to_string(j) +
                         ") out of range");
    }
    return shared_table(k).eval(k, j, q);
}

BigInt binomial(int k, int j) {
    if (k < 0 || j < 0 || j > k) {
        throw UsageError("binomial index out of range");
    }
    return shared_table(k).eval_at_one(k, j);
}

}  // namespace orelab
