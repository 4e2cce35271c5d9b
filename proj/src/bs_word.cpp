#include <cctype>

#include "hgrig/bs_algebra.hpp"
#include "hgrig/error.hpp"

namespace hgrig {

namespace {

void append_letter(Word& word, Label generator, BigInt exponent) {
  if (exponent == 0) return;
  if (!word.empty() && word.back().generator == generator) {
    word.back().exponent += exponent;
    if (word.back().exponent == 0) word.pop_back();
    return;
  }
  word.push_back({generator, std::move(exponent)});
}

}  // namespace

Word parse_word(std::string_view text) {
  Word word;
  std::size_t i = 0;
  auto error = [&](const std::string& what) {
    return ValidationError("cannot parse word '" + std::string(text) + "': " + what + " at offset " +
                           std::to_string(i));
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c == 'e' || c == '1') {
      ++i;
      continue;
    }
    Label generator;
    int base_sign = 1;
    switch (c) {
      case 'a': generator = Label::a; break;
      case 'A': generator = Label::a; base_sign = -1; break;
      case 't': generator = Label::t; break;
      case 'T': generator = Label::t; base_sign = -1; break;
      default: throw error(std::string("unexpected character '") + c + "'");
    }
    ++i;
    BigInt exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
        throw error("missing exponent after '^'");
      }
      exponent = from_decimal(text.substr(start, i - start));
    }
    append_letter(word, generator, exponent * base_sign);
  }
  return word;
}

std::string to_string(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (const Letter& letter : word) {
    if (!out.empty()) out += ' ';
    const char lower = label_char(letter.generator);
    if (letter.exponent == 1) {
      out += lower;
    } else if (letter.exponent == -1) {
      out += static_cast<char>(std::toupper(lower));
    } else {
      out += lower;
      out += '^';
      out += letter.exponent.str();
    }
  }
  return out;
}

Word inverse(const Word& word) {
  Word result;
  result.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) result.push_back({it->generator, -it->exponent});
  return result;
}

Word render(const BsElement& x) {
  Word word;
  for (const Syllable& s : x.syllables()) {
    append_letter(word, Label::a, s.exponent);
    append_letter(word, Label::t, s.sign);
  }
  append_letter(word, Label::a, x.tail());
  return word;
}

std::string to_string(const BsElement& x) { return to_string(render(x)); }

}  // namespace hgrig
