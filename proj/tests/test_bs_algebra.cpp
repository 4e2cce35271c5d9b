#include "doctest.h"

#include "hgrig/bs_algebra.hpp"
#include "hgrig/error.hpp"
#include "oracles.hpp"

using namespace hgrig;
using hgrig::testing::affine_of;
using hgrig::testing::concat;
using hgrig::testing::random_word;

TEST_CASE("make_params canonicalizes") {
  BsParams p = make_params(2, 4);
  CHECK(p.m == 2);
  CHECK(p.n == 4);
  CHECK(p.h == 2);
  CHECK(p.p == 1);
  CHECK(p.q == 2);

  CHECK(make_params(4, 2) == make_params(2, 4));
  CHECK(make_params(-2, 3).m == 2);
  CHECK(make_params(-2, 3).n == -3);
  CHECK(make_params(2, -3).n == -3);
  CHECK_THROWS_AS(make_params(2, 2), ValidationError);
  CHECK_THROWS_AS(make_params(0, 2), ValidationError);
  CHECK_THROWS_AS(make_params(2, 0), ValidationError);
  CHECK_THROWS_AS(make_params(-3, 3), ValidationError);
}

TEST_CASE("word syntax") {
  Word w = parse_word("t a^5 T");
  REQUIRE(w.size() == 3);
  CHECK(w[1].exponent == 5);
  CHECK(w[2].exponent == -1);
  CHECK(to_string(parse_word("tat")) == "t a t");
  CHECK(to_string(parse_word("A^3 a^3")) == "e");
  CHECK(to_string(parse_word("a^-2*t^2")) == "a^-2 t^2");
  CHECK(parse_word("e").empty());
  CHECK_THROWS_AS(parse_word("x"), ValidationError);
  CHECK_THROWS_AS(parse_word("a^"), ValidationError);
}

TEST_CASE("normal form examples") {
  BsParams p12 = make_params(1, 2);
  BsParams p23 = make_params(2, 3);

  CHECK(normalize(p12, "t a T") == normalize(p12, "a^2"));
  CHECK(to_string(normalize(p12, "t a T")) == "a^2");

  BsElement x = normalize(p23, "t a^5 T");
  CHECK(to_string(x) == "t a T a^6");
  REQUIRE(x.syllables().size() == 2);
  CHECK(x.syllables()[0].exponent == 0);
  CHECK(x.syllables()[1].exponent == 1);
  CHECK(x.tail() == 6);
  for (PinchOrder order : {PinchOrder::leftmost, PinchOrder::rightmost}) {
    CHECK(normalize_by_pinch_reduction(p23, parse_word("t a^5 T"), order) == x);
  }

  CHECK(is_identity(multiply(normalize(p23, "t a^2 T"), normalize(p23, "a^-3"))));
  BsElement y = normalize(p23, "a t^-2 a^7 t");
  CHECK(multiply(y, BsElement(p23)) == y);
  CHECK(is_identity(multiply(y, invert(y))));
}

TEST_CASE("subgroup membership") {
  BsParams p12 = make_params(1, 2);
  BsParams p23 = make_params(2, 3);
  CHECK(subgroup_membership(normalize(p23, "a^5"), Label::a) == BigInt(5));
  CHECK(subgroup_membership(normalize(p12, "t a T"), Label::a) == BigInt(2));
  CHECK_FALSE(subgroup_membership(normalize(p23, "t a T"), Label::a).has_value());
  CHECK(subgroup_membership(normalize(p23, "T^3"), Label::t) == BigInt(-3));
  CHECK(subgroup_membership(BsElement(p23), Label::t) == BigInt(0));
  CHECK_FALSE(subgroup_membership(normalize(p23, "t a"), Label::t).has_value());
  // a^2 t a^-3 = t a^3 a^-3 = t in BS(2,3)
  CHECK(subgroup_membership(normalize(p23, "a^3 t A^2"), Label::t) == BigInt(1));
}

TEST_CASE("from_normal_form validates") {
  BsParams p = make_params(2, 3);
  CHECK_NOTHROW(BsElement::from_normal_form(p, {{2, 1}, {1, -1}}, 7));
  CHECK_THROWS_AS(BsElement::from_normal_form(p, {{3, 1}}, 0), ValidationError);
  CHECK_THROWS_AS(BsElement::from_normal_form(p, {{2, -1}}, 0), ValidationError);
  CHECK_THROWS_AS(BsElement::from_normal_form(p, {{1, 1}, {0, -1}}, 0), ValidationError);
  CHECK_THROWS_AS(BsElement::from_normal_form(p, {{1, 1}, {1, 2}}, 0), ValidationError);
}

TEST_CASE("exponents grow without overflow") {
  BsParams p = make_params(1, 3);
  const int d = 60;
  Word w;
  w.push_back({Label::t, d});
  w.push_back({Label::a, 1});
  w.push_back({Label::t, -d});
  BsElement x = normalize(p, w);
  CHECK(x.syllables().empty());
  CHECK(x.tail() == hgrig::pow(3, d));
}

TEST_CASE("random words against independent oracles") {
  std::mt19937_64 rng(7);
  for (auto [m, n] : {std::pair{1, 2}, {2, 3}, {2, 4}, {2, -3}, {1, 3}, {3, -5}}) {
    BsParams p = make_params(m, n);
    for (int i = 0; i < 400; ++i) {
      Word u = random_word(rng, 14);
      Word v = random_word(rng, 14);
      BsElement x = normalize(p, u);
      CHECK(normalize(p, render(x)) == x);
      CHECK(normalize_by_pinch_reduction(p, u, PinchOrder::leftmost) == x);
      CHECK(normalize_by_pinch_reduction(p, u, PinchOrder::rightmost) == x);
      CHECK(is_identity(normalize(p, concat(u, inverse(u)))));
      CHECK(multiply(x, normalize(p, v)) == normalize(p, concat(u, v)));
      CHECK(invert(x) == normalize(p, inverse(u)));
      // normal forms respect the affine quotient
      CHECK(affine_of(p, render(x)) == affine_of(p, u));
    }
  }
}

TEST_CASE("BS(1,2) normal forms separate exactly the affine classes") {
  BsParams p = make_params(1, 2);
  std::mt19937_64 rng(11);
  std::vector<std::pair<Word, BsElement>> sample;
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 8);
    sample.emplace_back(w, normalize(p, w));
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      const bool same_affine = affine_of(p, sample[i].first) == affine_of(p, sample[j].first);
      REQUIRE((sample[i].second == sample[j].second) == same_affine);
    }
  }
}
