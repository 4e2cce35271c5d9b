#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgrig {

using BigInt = boost::multiprecision::cpp_int;

/// Residue of `x` modulo `|modulus|`, always in [0, |modulus|).
std::int64_t floor_mod(const BigInt& x, std::int64_t modulus);

/// Splits `x = r + modulus * c` with r in [0, |modulus|). Works for negative
/// moduli; the quotient is exact.
std::pair<std::int64_t, BigInt> split_residue(const BigInt& x, std::int64_t modulus);

std::string to_decimal(const BigInt& x);
BigInt from_decimal(std::string_view text);

/// Throws std::overflow_error if `x` does not fit in 64 bits.
std::int64_t to_int64(const BigInt& x);

BigInt pow(std::int64_t base, unsigned exponent);

}  // namespace hgrig
