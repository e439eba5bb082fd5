#include "gtsh/word.hpp"

#include <charconv>
#include <stdexcept>

namespace gtsh {

namespace {

Word letter_power(Gen g, Int e) {
  Word w;
  w.push_back({g, e});
  return w;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

void Word::push_back(Syllable s) {
  if (s.exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == s.gen) {
    Int e = checked_add(syl_.back().exp, s.exp);
    if (e == 0)
      syl_.pop_back();
    else
      syl_.back().exp = e;
    return;
  }
  syl_.push_back(s);
}

Word& Word::append(const Word& w) {
  std::size_t i = 0;
  while (i < w.syl_.size() && !syl_.empty()) push_back(w.syl_[i++]);
  syl_.insert(syl_.end(), w.syl_.begin() + static_cast<std::ptrdiff_t>(i), w.syl_.end());
  return *this;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) w.push_back(s);
  return w;
}

Word Word::x(Int e) { return letter_power(Gen::X, e); }
Word Word::y(Int e) { return letter_power(Gen::Y, e); }

Word Word::z(Int e) {
  static const Word z1 = [] {
    Word w;
    w.push_back({Gen::Y, -1});
    w.push_back({Gen::X, -1});
    return w;
  }();
  return power(z1, e);
}

Int Word::length() const {
  Int n = 0;
  for (const auto& s : syl_) n = checked_add(n, s.exp < 0 ? checked_neg(s.exp) : s.exp);
  return n;
}

Word Word::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("word: empty text (use `1` for the identity)");
  if (text == "1") return {};

  Word out;
  while (true) {
    auto star = text.find('*');
    std::string_view tok = trim(text.substr(0, star));
    if (tok.empty()) throw std::invalid_argument("word: empty factor");

    char letter = tok.front();
    Int e = 1;
    std::string_view rest = trim(tok.substr(1));
    if (!rest.empty()) {
      if (rest.front() != '^') throw std::invalid_argument("word: expected `^` after letter");
      rest = trim(rest.substr(1));
      const char* first = rest.data();
      const char* last = rest.data() + rest.size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, e);
      if (ec == std::errc::result_out_of_range) throw std::overflow_error("word: exponent out of range");
      if (ec != std::errc() || ptr != last) throw std::invalid_argument("word: bad exponent");
    }

    switch (letter) {
      case 'x': out = concat(out, Word::x(e)); break;
      case 'y': out = concat(out, Word::y(e)); break;
      case 'z': out = concat(out, Word::z(e)); break;
      default: throw std::invalid_argument(std::string("word: unknown letter `") + letter + "`");
    }

    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return out;
}

std::string Word::to_string() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += '*';
    out += s.gen == Gen::X ? 'x' : 'y';
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  for (const auto& s : b.syllables()) out.push_back(s);
  return out;
}

Word invert(const Word& w) {
  Word out;
  const auto& s = w.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back({it->gen, checked_neg(it->exp)});
  return out;
}

Word power(const Word& w, Int e) {
  Word base = e < 0 ? invert(w) : w;
  // Avoid negating INT64_MIN by peeling one factor off first.
  Word out;
  if (e < 0) {
    out = base;
    e = -(e + 1);
  }
  while (e > 0) {
    if (e & 1) out = concat(out, base);
    e >>= 1;
    if (e > 0) base = concat(base, base);
  }
  return out;
}

Word commutator(const Word& a, const Word& b) { return a * b * invert(a) * invert(b); }

Word apply_theta(const Word& w) {
  Word out;
  for (const auto& s : w.syllables()) out.push_back({s.gen == Gen::X ? Gen::Y : Gen::X, s.exp});
  return out;
}

Word apply_tau(const Word& w) {
  Word out;
  for (const auto& s : w.syllables()) {
    if (s.gen == Gen::X)
      out.push_back({Gen::Y, s.exp});
    else
      out = concat(out, Word::z(s.exp));
  }
  return out;
}

Word endo_E(Int m, const Word& f, const Word& w) {
  const Int u = checked_add(checked_mul(2, m), 1);
  const Word f_inv = invert(f);
  Word out;
  for (const auto& s : w.syllables()) {
    const Int e = checked_mul(u, s.exp);
    if (s.gen == Gen::X)
      out.push_back({Gen::X, e});
    else
      out.append(f_inv).append(Word::y(e)).append(f);
  }
  return out;
}

std::pair<Int, Int> abelianize(const Word& w) {
  Int ex = 0, ey = 0;
  for (const auto& s : w.syllables()) {
    if (s.gen == Gen::X)
      ex = checked_add(ex, s.exp);
    else
      ey = checked_add(ey, s.exp);
  }
  return {ex, ey};
}

}  // namespace gtsh
