#pragma once

// Exact arithmetic in BS(m,n) = <a,t | t a^m t^-1 = a^n>.
//
// Elements are stored in Britton normal form
//
//     a^{e_1} t^{s_1} a^{e_2} t^{s_2} ... a^{e_k} t^{s_k} a^{tail}
//
// where e_i lies in [0,|n|) when s_i = +1 and in [0,|m|) when s_i = -1, and
// no pinch t a^0 t^-1 or t^-1 a^0 t survives. Carries move rightwards through
// the relations a^n t = t a^m and a^m t^-1 = t^-1 a^n.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgrig/bigint.hpp"

namespace hgrig {

enum class Label : std::uint8_t { a, t };

char label_char(Label label);

/// Canonical BS(m,n) parameters: 0 < m < |n|.
struct BsParams {
  std::int64_t m = 1;
  std::int64_t n = 2;
  std::int64_t h = 1;  // gcd(|m|,|n|)
  std::int64_t p = 1;  // |m| / h
  std::int64_t q = 2;  // |n| / h

  std::int64_t abs_m() const { return m < 0 ? -m : m; }
  std::int64_t abs_n() const { return n < 0 ? -n : n; }
  bool m_divides_n() const { return n % m == 0; }

  friend bool operator==(const BsParams&, const BsParams&) = default;
};

/// Validates and canonicalizes: swaps so |m| < |n| (t -> t^-1), then flips
/// both signs so m > 0. Rejects m = 0, n = 0 and |m| = |n|.
BsParams make_params(std::int64_t m, std::int64_t n);

std::string to_string(const BsParams& params);

struct Syllable {
  BigInt exponent;  // a-exponent preceding the t-letter
  int sign = 1;     // +1 for t, -1 for t^-1

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class BsElement {
 public:
  /// The identity of BS(params).
  explicit BsElement(const BsParams& params) : params_(params) {}

  /// Builds from stored normal-form data; throws ValidationError if the data
  /// violates the residue ranges or contains a pinch.
  static BsElement from_normal_form(const BsParams& params, std::vector<Syllable> syllables, BigInt tail);

  const BsParams& params() const { return params_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  const BigInt& tail() const { return tail_; }
  std::size_t syllable_count() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty() && tail_ == 0; }

  /// In-place right multiplication by a^e.
  void append_a(const BigInt& e) { tail_ += e; }
  /// In-place right multiplication by t^sign, sign = +-1.
  void append_t(int sign);
  /// In-place right multiplication by t^e.
  void append_t_power(const BigInt& e);

  /// Copy with the tail exponent dropped: the canonical point of the a-coset.
  BsElement without_tail() const;

  std::size_t hash() const;

  friend bool operator==(const BsElement& x, const BsElement& y) {
    return x.params_ == y.params_ && x.tail_ == y.tail_ && x.syllables_ == y.syllables_;
  }
  /// Deterministic total order (syllable count, then syllables, then tail).
  friend std::strong_ordering operator<=>(const BsElement& x, const BsElement& y);

 private:
  BsParams params_;
  std::vector<Syllable> syllables_;
  BigInt tail_ = 0;
};

struct BsElementHash {
  std::size_t operator()(const BsElement& x) const { return x.hash(); }
};

// ---------------------------------------------------------------------------
// Words

struct Letter {
  Label generator = Label::a;
  BigInt exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses `a`, `A`, `t`, `T` tokens with optional `^<int>`; whitespace and
/// `*` separate tokens; `e` or `1` denotes the identity.
Word parse_word(std::string_view text);
std::string to_string(const Word& word);
Word inverse(const Word& word);
/// The stored normal form spelled as a word (round-trips through normalize).
Word render(const BsElement& x);
std::string to_string(const BsElement& x);

// ---------------------------------------------------------------------------
// Operations

/// Normal form of a word by streaming right multiplication.
BsElement normalize(const BsParams& params, const Word& word);
BsElement normalize(const BsParams& params, std::string_view word_text);

enum class PinchOrder { leftmost, rightmost };

/// Independent route: free reduction, repeated pinch elimination in the given
/// order, then a single rightward carry pass.
BsElement normalize_by_pinch_reduction(const BsParams& params, const Word& word, PinchOrder order);

/// Throws ValidationError when the parameters differ.
BsElement multiply(const BsElement& x, const BsElement& y);
BsElement invert(const BsElement& x);
bool is_identity(const BsElement& x);

BsElement power_of(const BsParams& params, Label generator, const BigInt& exponent);

/// z with x = a^z (label a) or x = t^z (label t); nullopt otherwise.
std::optional<BigInt> subgroup_membership(const BsElement& x, Label label);

}  // namespace hgrig
