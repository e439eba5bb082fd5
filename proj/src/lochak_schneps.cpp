#include "gtsh/lochak_schneps.hpp"

#include <array>
#include <stdexcept>

namespace gtsh {

const char* ls_case_name(LsCase c) { return c == LsCase::TrivialCoset ? "trivial-coset" : "xy-coset"; }

LsCase ls_case_of(Int m) {
  switch (mod(m, 3)) {
    case 0: return LsCase::TrivialCoset;
    case 2: return LsCase::XyCoset;
    default: throw std::invalid_argument("ls_case_of: m = 1 mod 3 has no Lochak-Schneps case");
  }
}

LsWitness ls_witness(const Shadow& s) {
  if (s.n % 3 != 0) throw std::invalid_argument("ls_witness: requires 3 | n");
  const Int m = s.m, k = s.k;
  const Int kap = kappa(m);

  LsWitness w;
  w.which = ls_case_of(m);
  if (mod(kap, 4) == 0)
    w.g = Word::x(2 * k) * Word::z(kap / 2);
  else
    w.g = Word::y(2 * k + 2) * Word::z(kap / 2);

  switch (mod(m, 6)) {
    case 0: w.h = Word::x(2 * k + m) * Word::y(m); break;
    case 2: w.h = Word::x(2 * k - 1) * Word::z(-m - 2); break;
    case 3: w.h = Word::x(-2 * k - m + 1) * Word::y(-m); break;
    case 5: w.h = Word::x(-2 * k) * Word::z(-m); break;
    default: throw std::logic_error("ls_witness: valid shadow with m = 1 mod 3");
  }
  return w;
}

bool ls_verify(const Shadow& s, const Word& g, const Word& h) {
  if (s.n % 3 != 0) throw std::invalid_argument("ls_verify: requires 3 | n");
  const Int n = s.n;
  if (mod(s.m, 3) == 1) return false;
  const Word f = s.representative_word();

  if (psi_eval(n, f) != psi_eval(n, invert(apply_theta(g)) * g)) return false;

  const Word lhs = f * Word::x(s.m);
  Word rhs = invert(apply_tau(h));
  if (ls_case_of(s.m) == LsCase::XyCoset) rhs = rhs * Word::x() * Word::y();
  rhs = rhs * h;
  return psi_eval(n, lhs) == psi_eval(n, rhs);
}

bool ls_exists_brute(Int n, Int m, const CommTriple& g) {
  if (n % 3 != 0) throw std::invalid_argument("ls_exists_brute: requires 3 | n");
  if (g.n != n) throw std::invalid_argument("ls_exists_brute: modulus mismatch");
  if (mod(m, 3) == 1) return false;

  const std::array<DihTriple, 2> gens{xbar(n), ybar(n)};
  const auto elements = bfs_closure(n, gens);
  const DihTriple target_first = g.to_triple();

  bool first = false;
  for (const auto& a : elements) {
    if (gn_theta(a).inverse() * a == target_first) {
      first = true;
      break;
    }
  }
  if (!first) return false;

  const DihTriple target_second = target_first * pow(xbar(n), m);
  const DihTriple middle =
      ls_case_of(m) == LsCase::XyCoset ? xbar(n) * ybar(n) : DihTriple::identity(n);
  for (const auto& b : elements)
    if (gn_tau(b).inverse() * middle * b == target_second) return true;
  return false;
}

}  // namespace gtsh
