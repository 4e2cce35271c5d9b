#include "hgrig/bigint.hpp"

#include <limits>
#include <stdexcept>

#include "hgrig/error.hpp"

namespace hgrig {

std::int64_t floor_mod(const BigInt& x, std::int64_t modulus) {
  const BigInt mod = modulus < 0 ? BigInt(-modulus) : BigInt(modulus);
  BigInt r = x % mod;  // truncated: sign follows x
  if (r < 0) r += mod;
  return r.convert_to<std::int64_t>();
}

std::pair<std::int64_t, BigInt> split_residue(const BigInt& x, std::int64_t modulus) {
  const std::int64_t r = floor_mod(x, modulus);
  BigInt c = (x - r) / modulus;
  return {r, std::move(c)};
}

std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt from_decimal(std::string_view text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ValidationError("malformed integer literal '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ValidationError("malformed integer literal '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits);
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

BigInt pow(std::int64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace hgrig
