#include "hgrig/bs_algebra.hpp"

#include <numeric>
#include <utility>

#include <boost/container_hash/hash.hpp>

#include "hgrig/error.hpp"

namespace hgrig {

char label_char(Label label) { return label == Label::a ? 'a' : 't'; }

BsParams make_params(std::int64_t m, std::int64_t n) {
  if (m == 0) throw ValidationError("BS parameter m must be nonzero");
  if (n == 0) throw ValidationError("BS parameter n must be nonzero");
  const std::int64_t am = m < 0 ? -m : m;
  const std::int64_t an = n < 0 ? -n : n;
  if (am == an) throw ValidationError("BS parameters must satisfy |m| != |n|");
  if (am > an) std::swap(m, n);
  if (m < 0) {
    m = -m;
    n = -n;
  }
  BsParams params;
  params.m = m;
  params.n = n;
  params.h = std::gcd(params.abs_m(), params.abs_n());
  params.p = params.abs_m() / params.h;
  params.q = params.abs_n() / params.h;
  return params;
}

std::string to_string(const BsParams& params) {
  return "BS(" + std::to_string(params.m) + "," + std::to_string(params.n) + ")";
}

BsElement BsElement::from_normal_form(const BsParams& params, std::vector<Syllable> syllables, BigInt tail) {
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    const Syllable& s = syllables[i];
    if (s.sign != 1 && s.sign != -1) throw ValidationError("syllable sign must be +1 or -1");
    const std::int64_t bound = s.sign > 0 ? params.abs_n() : params.abs_m();
    if (s.exponent < 0 || s.exponent >= bound) {
      throw ValidationError("syllable exponent " + s.exponent.str() + " outside residue range [0," +
                            std::to_string(bound) + ")");
    }
    if (i > 0 && s.exponent == 0 && syllables[i - 1].sign == -s.sign) {
      throw ValidationError("normal form contains a pinch at syllable " + std::to_string(i));
    }
  }
  BsElement x(params);
  x.syllables_ = std::move(syllables);
  x.tail_ = std::move(tail);
  return x;
}

void BsElement::append_t(int sign) {
  if (sign > 0) {
    auto [r, c] = split_residue(tail_, params_.n);
    if (r == 0 && !syllables_.empty() && syllables_.back().sign < 0) {
      // t^-1 a^{nc} t = a^{mc}
      tail_ = std::move(syllables_.back().exponent) + params_.m * c;
      syllables_.pop_back();
    } else {
      syllables_.push_back({BigInt(r), 1});
      tail_ = params_.m * c;
    }
  } else {
    auto [r, c] = split_residue(tail_, params_.m);
    if (r == 0 && !syllables_.empty() && syllables_.back().sign > 0) {
      // t a^{mc} t^-1 = a^{nc}
      tail_ = std::move(syllables_.back().exponent) + params_.n * c;
      syllables_.pop_back();
    } else {
      syllables_.push_back({BigInt(r), -1});
      tail_ = params_.n * c;
    }
  }
}

void BsElement::append_t_power(const BigInt& e) {
  const int sign = e < 0 ? -1 : 1;
  for (BigInt i = 0, count = e < 0 ? BigInt(-e) : e; i < count; ++i) append_t(sign);
}

BsElement BsElement::without_tail() const {
  BsElement x = *this;
  x.tail_ = 0;
  return x;
}

std::size_t BsElement::hash() const {
  std::size_t seed = 0;
  boost::hash_combine(seed, params_.m);
  boost::hash_combine(seed, params_.n);
  for (const Syllable& s : syllables_) {
    boost::hash_combine(seed, hash_value(s.exponent));
    boost::hash_combine(seed, s.sign);
  }
  boost::hash_combine(seed, hash_value(tail_));
  return seed;
}

std::strong_ordering operator<=>(const BsElement& x, const BsElement& y) {
  if (auto c = x.params_.m <=> y.params_.m; c != 0) return c;
  if (auto c = x.params_.n <=> y.params_.n; c != 0) return c;
  if (auto c = x.syllables_.size() <=> y.syllables_.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.syllables_.size(); ++i) {
    const Syllable& sx = x.syllables_[i];
    const Syllable& sy = y.syllables_[i];
    if (auto c = sy.sign <=> sx.sign; c != 0) return c;  // t before t^-1
    if (sx.exponent != sy.exponent) {
      return sx.exponent < sy.exponent ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  if (x.tail_ != y.tail_) return x.tail_ < y.tail_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BsElement normalize(const BsParams& params, const Word& word) {
  BsElement x(params);
  for (const Letter& letter : word) {
    if (letter.generator == Label::a) {
      x.append_a(letter.exponent);
    } else {
      x.append_t_power(letter.exponent);
    }
  }
  return x;
}

BsElement normalize(const BsParams& params, std::string_view word_text) {
  return normalize(params, parse_word(word_text));
}

BsElement normalize_by_pinch_reduction(const BsParams& params, const Word& word, PinchOrder order) {
  // exps[i] sits before signs[i]; exps.back() is the tail.
  std::vector<BigInt> exps{BigInt(0)};
  std::vector<int> signs;
  for (const Letter& letter : word) {
    if (letter.generator == Label::a) {
      exps.back() += letter.exponent;
      continue;
    }
    const int sign = letter.exponent < 0 ? -1 : 1;
    for (BigInt i = 0, count = abs(letter.exponent); i < count; ++i) {
      signs.push_back(sign);
      exps.emplace_back(0);
    }
  }

  auto pinch_at = [&](std::size_t j) -> std::optional<BigInt> {
    // exps[j] sits between signs[j-1] and signs[j]
    if (signs[j - 1] > 0 && signs[j] < 0 && exps[j] % params.m == 0) return (exps[j] / params.m) * params.n;
    if (signs[j - 1] < 0 && signs[j] > 0 && exps[j] % params.n == 0) return (exps[j] / params.n) * params.m;
    return std::nullopt;
  };

  for (;;) {
    std::optional<std::size_t> found;
    std::optional<BigInt> replacement;
    if (order == PinchOrder::leftmost) {
      for (std::size_t j = 1; j < signs.size() && !found; ++j) {
        if (auto r = pinch_at(j)) {
          found = j;
          replacement = std::move(r);
        }
      }
    } else {
      for (std::size_t j = signs.size(); j-- > 1 && !found;) {
        if (auto r = pinch_at(j)) {
          found = j;
          replacement = std::move(r);
        }
      }
    }
    if (!found) break;
    const std::size_t j = *found;
    exps[j - 1] += *replacement + exps[j + 1];
    exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(j), exps.begin() + static_cast<std::ptrdiff_t>(j + 2));
    signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(j - 1), signs.begin() + static_cast<std::ptrdiff_t>(j + 1));
  }

  std::vector<Syllable> syllables;
  syllables.reserve(signs.size());
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] > 0) {
      auto [r, c] = split_residue(exps[j], params.n);
      exps[j + 1] += params.m * c;
      syllables.push_back({BigInt(r), 1});
    } else {
      auto [r, c] = split_residue(exps[j], params.m);
      exps[j + 1] += params.n * c;
      syllables.push_back({BigInt(r), -1});
    }
  }
  return BsElement::from_normal_form(params, std::move(syllables), std::move(exps.back()));
}

BsElement multiply(const BsElement& x, const BsElement& y) {
  if (!(x.params() == y.params())) {
    throw ValidationError("cannot multiply elements of " + to_string(x.params()) + " and " + to_string(y.params()));
  }
  BsElement result = x;
  for (const Syllable& s : y.syllables()) {
    result.append_a(s.exponent);
    result.append_t(s.sign);
  }
  result.append_a(y.tail());
  return result;
}

BsElement invert(const BsElement& x) {
  BsElement result(x.params());
  result.append_a(-x.tail());
  const auto& syl = x.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    result.append_t(-it->sign);
    result.append_a(-it->exponent);
  }
  return result;
}

bool is_identity(const BsElement& x) { return x.is_identity(); }

BsElement power_of(const BsParams& params, Label generator, const BigInt& exponent) {
  BsElement x(params);
  if (generator == Label::a) {
    x.append_a(exponent);
  } else {
    x.append_t_power(exponent);
  }
  return x;
}

std::optional<BigInt> subgroup_membership(const BsElement& x, Label label) {
  if (label == Label::a) {
    if (x.syllables().empty()) return x.tail();
    return std::nullopt;
  }
  if (x.tail() != 0) return std::nullopt;
  const auto& syl = x.syllables();
  if (syl.empty()) return BigInt(0);
  const int sign = syl.front().sign;
  for (const Syllable& s : syl) {
    if (s.sign != sign || s.exponent != 0) return std::nullopt;
  }
  return BigInt(static_cast<std::int64_t>(syl.size()) * sign);
}

}  // namespace hgrig
