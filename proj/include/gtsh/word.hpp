#pragma once

// Reduced words in the free group F2 = <x, y>.
//
// A word is stored run-length encoded: a sequence of (generator, exponent)
// syllables with nonzero exponents and no two adjacent syllables on the same
// generator. The derived letter z = y^-1 x^-1 is never stored; it is expanded
// wherever it is accepted (Word::z, the text parser).

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtsh/arith.hpp"

namespace gtsh {

enum class Gen : unsigned char { X = 0, Y = 1 };

struct Syllable {
  Gen gen;
  Int exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;

  /// Builds a word from arbitrary syllables, reducing as it goes.
  static Word from_syllables(std::span<const Syllable> syllables);

  static Word x(Int e = 1);
  static Word y(Int e = 1);
  /// z^e with z = y^-1 x^-1, expanded.
  static Word z(Int e = 1);

  /// Text form `x^2*y^-1*x`; `1` is the empty word; `z` is accepted and expanded.
  /// Throws std::invalid_argument on malformed input.
  static Word parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  /// Letter length (sum of |exponent|).
  Int length() const;

  /// Appends one syllable with cancellation at the seam.
  void push_back(Syllable s);
  /// Appends a whole word, reducing at the seam.
  Word& append(const Word& w);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
};

Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
/// w^e for any integer e (binary powering).
Word power(const Word& w, Int e);
/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

/// theta: x <-> y.
Word apply_theta(const Word& w);
/// tau: x -> y, y -> y^-1 x^-1 (so z -> x).
Word apply_tau(const Word& w);

/// E_{m,f}: x -> x^(2m+1), y -> f^-1 y^(2m+1) f.
Word endo_E(Int m, const Word& f, const Word& w);

/// (sum of x-exponents, sum of y-exponents).
std::pair<Int, Int> abelianize(const Word& w);

inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

}  // namespace gtsh
