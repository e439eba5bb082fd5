#pragma once

// Lochak-Schneps conditions for shadows with target K^(n), 3 | n:
//
//   f = theta(g)^-1 g,
//   f x^m = tau(h)^-1 h        (m = 0 mod 3)
//   f x^m = tau(h)^-1 x y h    (m = 2 mod 3)
//
// all modulo K^(n)_F2, i.e. after applying psi_n.

#include "gtsh/dihedral.hpp"
#include "gtsh/shadow.hpp"
#include "gtsh/word.hpp"

namespace gtsh {

enum class LsCase { TrivialCoset, XyCoset };

const char* ls_case_name(LsCase c);

/// trivial-coset when m = 0 mod 3, xy-coset when m = 2 mod 3.
/// Throws std::invalid_argument for m = 1 mod 3.
LsCase ls_case_of(Int m);

struct LsWitness {
  Word g;
  Word h;
  LsCase which;
};

/// Closed-form witnesses. Throws std::invalid_argument unless 3 | n.
LsWitness ls_witness(const Shadow& s);

/// Evaluates both conditions through psi_n for the given words.
bool ls_verify(const Shadow& s, const Word& g, const Word& h);

/// Searches G_n for solutions gbar, hbar of both coset equations for the pair
/// (m, g) at modulus n. Throws std::invalid_argument unless 3 | n.
bool ls_exists_brute(Int n, Int m, const CommTriple& g);

}  // namespace gtsh
