#include "orelab/ring_spec.hpp"

#include <sstream>

namespace orelab {

namespace {

std::shared_ptr<const RingSpec> box(RingSpec s) {
    return std::make_shared<const RingSpec>(std::move(s));
}

}  // namespace

const char* ring_kind_name(RingKind k) {
    switch (k) {
        case RingKind::ModularInt: return "ModularInt";
        case RingKind::PrimeField: return "PrimeField";
        case RingKind::GaloisField: return "GaloisField";
        case RingKind::Rational: return "Rational";
        case RingKind::TruncatedPoly: return "TruncatedPoly";
        case RingKind::Matrix: return "Matrix";
        case RingKind::UpperTriangular: return "UpperTriangular";
        case RingKind::StrictUpperTriangular: return "StrictUpperTriangular";
        case RingKind::DirectSumShift: return "DirectSumShift";
        case RingKind::Dorroh: return "Dorroh";
        case RingKind::Quotient: return "Quotient";
    }
    return "?";
}

RingSpec RingSpec::modular_int(std::uint64_t n) {
    RingSpec s;
    s.kind = RingKind::ModularInt;
    s.modulus = n;
    return s;
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
    RingSpec s;
    s.kind = RingKind::PrimeField;
    s.modulus = p;
    return s;
}

RingSpec RingSpec::galois_field(std::uint64_t p, std::uint32_t k) {
    RingSpec s;
    s.kind = RingKind::GaloisField;
    s.modulus = p;
    s.param = k;
    return s;
}

RingSpec RingSpec::rationals() {
    RingSpec s;
    s.kind = RingKind::Rational;
    return s;
}

RingSpec RingSpec::truncated_poly(RingSpec base, std::uint32_t n) {
    RingSpec s;
    s.kind = RingKind::TruncatedPoly;
    s.param = n;
    s.base = box(std::move(base));
    return s;
}

RingSpec RingSpec::matrix(RingSpec base, std::uint32_t d) {
    RingSpec s;
    s.kind = RingKind::Matrix;
    s.param = d;
    s.base = box(std::move(base));
    return s;
}

RingSpec RingSpec::upper_triangular(RingSpec base, std::uint32_t d) {
    RingSpec s;
    s.kind = RingKind::UpperTriangular;
    s.param = d;
    s.base = box(std::move(base));
    return s;
}

RingSpec RingSpec::strict_upper_triangular(RingSpec base, std::uint32_t d) {
    RingSpec s;
    s.kind = RingKind::StrictUpperTriangular;
    s.param = d;
    s.base = box(std::move(base));
    return s;
}

RingSpec RingSpec::direct_sum_shift(RingSpec base) {
    RingSpec s;
    s.kind = RingKind::DirectSumShift;
    s.base = box(std::move(base));
    return s;
}

RingSpec RingSpec::dorroh(RingSpec inner, RingSpec scalar) {
    RingSpec s;
    s.kind = RingKind::Dorroh;
    s.base = box(std::move(inner));
    s.scalar = box(std::move(scalar));
    return s;
}

std::string RingSpec::signature() const {
    std::ostringstream out;
    out << ring_kind_name(kind) << '(';
    if (modulus != 0) out << modulus;
    if (param != 0) out << ',' << param;
    if (base) out << ';' << base->signature();
    if (scalar) out << '|' << scalar->signature();
    out << ')';
    return out.str();
}

std::string RingSpec::describe() const {
    std::ostringstream out;
    switch (kind) {
        case RingKind::ModularInt: out << "Z_" << modulus; break;
        case RingKind::PrimeField: out << "F_" << modulus; break;
        case RingKind::GaloisField: out << "F_" << modulus << '^' << param; break;
        case RingKind::Rational: out << "Q"; break;
        case RingKind::TruncatedPoly:
            out << base->describe() << "[y]/(y^" << param << ')';
            break;
        case RingKind::Matrix: out << "M_" << param << '(' << base->describe() << ')'; break;
        case RingKind::UpperTriangular:
            out << "UT_" << param << '(' << base->describe() << ')';
            break;
        case RingKind::StrictUpperTriangular:
            out << "SUT_" << param << '(' << base->describe() << ')';
            break;
        case RingKind::DirectSumShift: out << "⊕_Z " << base->describe(); break;
        case RingKind::Dorroh:
            out << "Dorroh(" << base->describe() << ", " << scalar->describe() << ')';
            break;
        case RingKind::Quotient: out << base->describe() << "/I"; break;
    }
    return out.str();
}

bool operator==(const RingSpec& a, const RingSpec& b) {
    if (a.kind != b.kind || a.modulus != b.modulus || a.param != b.param) return false;
    if (static_cast<bool>(a.base) != static_cast<bool>(b.base)) return false;
    if (a.base && !(*a.base == *b.base)) return false;
    if (static_cast<bool>(a.scalar) != static_cast<bool>(b.scalar)) return false;
    if (a.scalar && !(*a.scalar == *b.scalar)) return false;
    return true;
}

}  // namespace orelab
