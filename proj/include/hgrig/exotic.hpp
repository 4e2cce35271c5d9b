#pragma once

// The exotic line-preserving bijection of BS(1,2): identity on the high
// t-lines a^{k 2^n}<t>, left multiplication by a^{2^n} on all others.

#include "hgrig/cayley_lines.hpp"
#include "hgrig/report.hpp"

namespace hgrig {

struct ExoticParams {
  unsigned n = 0;
  BigInt shift = 1;  // 2^n

  friend bool operator==(const ExoticParams&, const ExoticParams&) = default;
};

ExoticParams make_exotic_params(unsigned n);

enum class Height { high, low };

std::string to_string(Height height);

/// Throws ValidationError outside BS(1,2).
Height classify(const BsElement& v, const ExoticParams& params);
BsElement phi(const BsElement& v, const ExoticParams& params);
BsElement phi_inverse(const BsElement& v, const ExoticParams& params);

/// Injectivity, line images, t-line order and an a-line order-violation
/// witness, on the points of the ball.
Report verify_exotic(const CayleyBall& ball, const ExoticParams& params);

}  // namespace hgrig
