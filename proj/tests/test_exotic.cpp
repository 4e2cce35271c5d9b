#include "doctest.h"

#include "hgrig/error.hpp"
#include "hgrig/exotic.hpp"
#include "oracles.hpp"

using namespace hgrig;

namespace {

// High iff the affine shift of x (constant along x<t>) lies in 2^n Z.
bool affine_high(const BsElement& x, const ExoticParams& params) {
  auto f = testing::affine_of(x.params(), render(x));
  if (denominator(f.shift) != 1) return false;
  return numerator(f.shift) % params.shift == 0;
}

}  // namespace

TEST_CASE("classification examples") {
  BsParams p = make_params(1, 2);
  ExoticParams e1 = make_exotic_params(1);
  CHECK(e1.shift == 2);
  CHECK(classify(BsElement(p), e1) == Height::high);
  CHECK(classify(normalize(p, "a"), e1) == Height::low);
  for (int k : {-3, 0, 1, 4}) {
    Word w = parse_word("t");
    w.push_back({Label::a, k});
    CHECK(classify(normalize(p, w), e1) == Height::high);
  }
  CHECK(phi(BsElement(p), e1) == BsElement(p));
  CHECK(phi(normalize(p, "a"), e1) == normalize(p, "a^3"));
  CHECK(phi(normalize(p, "a^2"), e1) == normalize(p, "a^2"));
  CHECK_THROWS_AS(classify(normalize(make_params(2, 3), "a"), e1), ValidationError);
}

TEST_CASE("classification agrees with the affine oracle") {
  BsParams p = make_params(1, 2);
  CayleyBall b = ball(p, 6);
  for (unsigned n : {0u, 1u, 2u, 3u}) {
    ExoticParams e = make_exotic_params(n);
    for (const BsElement& x : b.vertices()) {
      CHECK((classify(x, e) == Height::high) == affine_high(x, e));
      CHECK(phi_inverse(phi(x, e), e) == x);
    }
  }
}

TEST_CASE("verify_exotic") {
  BsParams p = make_params(1, 2);
  for (unsigned n : {0u, 1u, 2u}) {
    ExoticParams e = make_exotic_params(n);
    Report r = verify_exotic(ball(p, static_cast<int>(e.shift) + 4), e);
    CHECK(r.status == Status::pass);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].kind == "a-order-violation");
    if (n == 1) {
      CHECK(r.witnesses[0].detail["x"]["word"] == "a");
      CHECK(r.witnesses[0].detail["y"]["word"] == "a^2");
      CHECK(r.witnesses[0].detail["phi_x"]["word"] == "a^3");
      CHECK(r.witnesses[0].detail["phi_y"]["word"] == "a^2");
    }
  }
  // every point of the t-line through t is high, hence fixed
  ExoticParams e1 = make_exotic_params(1);
  for (int j = -4; j <= 4; ++j) {
    BsElement x = normalize(p, "t");
    x.append_t_power(j);
    CHECK(phi(x, e1) == x);
  }
}
