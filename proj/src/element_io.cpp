#include "orelab/element_io.hpp"

#include "orelab/error.hpp"
#include "orelab/ore.hpp"
#include "orelab/ring_kinds.hpp"

#include <cstdint>
#include <vector>

namespace orelab {

namespace {

using nlohmann::json;

std::int64_t as_integer(const json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) {
        try {
            return std::stoll(j.get<std::string>());
        } catch (const std::exception&) {
            throw ConfigError("expected an integer, got \"" + j.get<std::string>() + "\"");
        }
    }
    throw ConfigError("expected an integer, got " + j.dump());
}

BigRational as_rational(const json& j) {
    if (j.is_number_integer()) return BigRational(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return BigRational(BigInt(s));
            const BigInt num(s.substr(0, slash));
            const BigInt den(s.substr(slash + 1));
            if (den == 0) throw ConfigError("zero denominator in \"" + s + "\"");
            return BigRational(num, den);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("cannot parse rational \"" + s + "\"");
        }
    }
    throw ConfigError("expected a rational literal, got " + j.dump());
}

}  // namespace

RingElement element_from_json(const RingPtr& ring, const json& j) {
    switch (ring->kind()) {
        case RingKind::ModularInt:
        case RingKind::PrimeField: {
            const auto& r = static_cast<const ResidueRing&>(*ring);
            const std::int64_t v = as_integer(j);
            const std::int64_t n = static_cast<std::int64_t>(*ring->size());
            return r.make(static_cast<std::uint64_t>(((v % n) + n) % n));
        }
        case RingKind::Rational: {
            const auto& r = static_cast<const RationalField&>(*ring);
            return r.make(as_rational(j));
        }
        case RingKind::GaloisField: {
            const auto& r = static_cast<const GaloisFieldRing&>(*ring);
            if (!j.is_array()) throw ConfigError("GaloisField payload must be an array");
            if (j.size() > r.degree()) {
                throw ConfigError("too many coefficients for " + ring->describe());
            }
            std::vector<std::uint64_t> coeffs;
            const std::int64_t p = static_cast<std::int64_t>(r.char_p());
            for (const auto& c : j) {
                const std::int64_t v = as_integer(c);
                coeffs.push_back(static_cast<std::uint64_t>(((v % p) + p) % p));
            }
            return r.from_coefficients(coeffs);
        }
        case RingKind::TruncatedPoly: {
            const auto& r = static_cast<const TruncatedPolyRing&>(*ring);
            if (!j.is_array()) throw ConfigError("TruncatedPoly payload must be an array");
            if (j.size() > r.truncation()) {
                throw ConfigError("too many coefficients for " + ring->describe());
            }
            std::vector<RingElement> coeffs(r.truncation(), r.base()->zero());
            for (std::size_t i = 0; i < j.size(); ++i) {
                coeffs[i] = element_from_json(r.base(), j[i]);
            }
            return r.make(std::move(coeffs));
        }
        case RingKind::Matrix:
        case RingKind::UpperTriangular:
        case RingKind::StrictUpperTriangular: {
            const auto& r = static_cast<const MatrixRing&>(*ring);
            const std::uint32_t d = r.dim();
            if (!j.is_array() || j.size() != d) {
                throw ConfigError("matrix payload must be an array of " + std::to_string(d) +
                                  " rows");
            }
            std::vector<RingElement> entries;
            entries.reserve(static_cast<std::size_t>(d) * d);
            for (std::uint32_t i = 0; i < d; ++i) {
                if (!j[i].is_array() || j[i].size() != d) {
                    throw ConfigError("matrix row " + std::to_string(i) + " must have " +
                                      std::to_string(d) + " entries");
                }
                for (std::uint32_t c = 0; c < d; ++c) {
                    RingElement e = element_from_json(r.base(), j[i][c]);
                    if (!r.slot_free(i, c) && !r.base()->is_zero(e)) {
                        throw ConfigError("entry (" + std::to_string(i) + "," +
                                          std::to_string(c) + ") must be zero in " +
                                          ring->describe());
                    }
                    entries.push_back(std::move(e));
                }
            }
            return r.make(std::move(entries));
        }
        case RingKind::DirectSumShift: {
            const auto& r = static_cast<const DirectSumShiftRing&>(*ring);
            if (!j.is_array()) {
                throw ConfigError("DirectSumShift payload must be an array of [index, value]");
            }
            std::vector<std::int64_t> idx;
            std::vector<RingElement> val;
            for (const auto& entry : j) {
                if (!entry.is_array() || entry.size() != 2) {
                    throw ConfigError("DirectSumShift entry must be [index, value]");
                }
                idx.push_back(as_integer(entry[0]));
                val.push_back(element_from_json(r.base(), entry[1]));
            }
            return r.make_supported(std::move(idx), std::move(val));
        }
        case RingKind::Dorroh: {
            const auto& r = static_cast<const DorrohRing&>(*ring);
            if (!j.is_array() || j.size() != 2) {
                throw ConfigError("Dorroh payload must be [inner, scalar]");
            }
            return r.make(element_from_json(r.inner(), j[0]),
                          element_from_json(r.scalar_field(), j[1]));
        }
        case RingKind::Quotient:
            throw ConfigError("quotient ring elements have no payload syntax");
    }
    throw ConfigError("unknown ring kind");
}

json element_to_json(const RingElement& e) {
    const RingPtr& ring = e.owner();
    switch (ring->kind()) {
        case RingKind::ModularInt:
        case RingKind::PrimeField:
            return e.residue();
        case RingKind::Rational: {
            const BigRational& q = e.rational();
            if (boost::multiprecision::denominator(q) == 1) {
                return boost::multiprecision::numerator(q).str();
            }
            return q.str();
        }
        case RingKind::GaloisField:
        case RingKind::TruncatedPoly: {
            json arr = json::array();
            for (const auto& c : e.children()) arr.push_back(element_to_json(c));
            return arr;
        }
        case RingKind::Matrix:
        case RingKind::UpperTriangular:
        case RingKind::StrictUpperTriangular: {
            const auto& r = static_cast<const MatrixRing&>(*ring);
            const std::uint32_t d = r.dim();
            json rows = json::array();
            for (std::uint32_t i = 0; i < d; ++i) {
                json row = json::array();
                for (std::uint32_t c = 0; c < d; ++c) {
                    row.push_back(element_to_json(e.children()[i * d + c]));
                }
                rows.push_back(std::move(row));
            }
            return rows;
        }
        case RingKind::DirectSumShift: {
            json arr = json::array();
            const auto& s = e.support();
            for (std::size_t i = 0; i < s.indices.size(); ++i) {
                arr.push_back(json::array({s.indices[i], element_to_json(s.values[i])}));
            }
            return arr;
        }
        case RingKind::Dorroh:
            return json::array(
                {element_to_json(e.children()[0]), element_to_json(e.children()[1])});
        case RingKind::Quotient:
            throw UnsupportedOperation("quotient ring elements have no payload syntax");
    }
    throw InternalError("unknown ring kind");
}

RingElement element_from_string(const RingPtr& ring, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        throw ConfigError("cannot parse element literal: " + text);
    }
    return element_from_json(ring, j);
}

OrePoly poly_from_json(const OreContextPtr& ctx, const json& j) {
    if (!j.is_array()) throw ConfigError("polynomial literal must be a coefficient array");
    std::vector<RingElement> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(element_from_json(ctx->ring, c));
    return OrePoly::from_coeffs(ctx, std::move(coeffs));
}

json poly_to_json(const OrePoly& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(element_to_json(c));
    return arr;
}

}  // namespace orelab
