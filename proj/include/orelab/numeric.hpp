#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace orelab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool is_prime_u64(std::uint64_t n);

/// (a * b) mod m without overflow; m > 0.
std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// (base ^ exp) mod m; m > 0.
std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// lcm(a, b) saturating at `cap` (returns 0 once the lcm would exceed cap).
std::uint64_t lcm_capped_u64(std::uint64_t a, std::uint64_t b, std::uint64_t cap);

}  // namespace orelab
