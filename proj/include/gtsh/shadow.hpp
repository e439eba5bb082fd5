#pragma once

// GT-shadows with dihedral target K^(n).
//
// A shadow is stored in canonical coordinates (n, m, k): n is the even
// modulus (odd targets are doubled, since K^(n) = K^(2n) for odd n),
// m in [0, n) and k in [0, n/2). It stands for the pair
//
//   [m, x^{2k} y^{-2k} z^{kappa(m)}],   psi_n(f) = (r^{2k}, r^{-2k}, r^{kappa(m)}).

#include <cstddef>
#include <string>
#include <vector>

#include "gtsh/arith.hpp"
#include "gtsh/dihedral.hpp"
#include "gtsh/word.hpp"

namespace gtsh {

/// m + 1 for odd m, -m for even m.
constexpr Int kappa(Int m) { return mod(m, 2) != 0 ? m + 1 : -m; }

/// K_ord of K^(n), i.e. lcm(n, 2).
constexpr Int k_ord(Int n) { return lcm(n, 2); }

/// Default largest modulus accepted by brute-force enumeration.
inline constexpr Int kDefaultBruteBound = 24;

struct Shadow {
  Int n = 4;  // canonical, even, >= 4
  Int m = 0;  // [0, n)
  Int k = 0;  // [0, n/2)

  /// Canonicalizes n, normalizes m and k, and validates the shadow
  /// conditions. Throws std::invalid_argument on failure.
  static Shadow make(Int n, Int m, Int k);
  static Shadow identity(Int n);

  Int n1() const { return n / 2; }
  /// 2m + 1 mod 2n.
  Int u() const { return mod(2 * m + 1, 2 * n); }
  /// (r^{2k}, r^{-2k}, r^{kappa(m)}) as an element of [G_n, G_n].
  CommTriple g() const;
  /// x^{2k} y^{-2k} z^{kappa(m)}, z expanded.
  Word representative_word() const;

  /// `m.k`, used as the Cayley table header.
  std::string label() const;

  friend bool operator==(const Shadow&, const Shadow&) = default;
  friend auto operator<=>(const Shadow&, const Shadow&) = default;
};

/// Both simplified hexagon identities in G_n:
///   g theta(g) = 1   and   tau^2(ybar^m g) tau(ybar^m g) ybar^m g = 1.
/// Throws NotMemberError if g is not in [G_n, G_n].
bool hexagon_check(Int n, Int m, const CommTriple& g);

/// gcd(2m+1, lcm(n,2)) = 1 and g in [G_n, G_n].
bool charming_check(Int n, Int m, const DihTriple& g);

/// Converts a pair (m, g) at modulus n (any n >= 3) into canonical
/// coordinates. Throws std::logic_error when g is not of the form
/// (r^{2k}, r^{-2k}, r^{kappa(m)}).
Shadow shadow_from_pair(Int n, Int m, const DihTriple& g);

/// All charming pairs passing the hexagon check, found by scanning every m
/// and every element of [G_n, G_n]. Sorted by (m, k).
/// Throws std::out_of_range if n > bound.
std::vector<Shadow> enumerate_brute(Int n, Int bound = kDefaultBruteBound);

/// The closed-form set, sorted by (m, k).
std::vector<Shadow> enumerate_closed(Int n);

/// Word-level composition: [m1,f1] o [m2,f2] = [2 m1 m2 + m1 + m2, f1 E_{m1,f1}(f2)],
/// evaluated through psi_n and re-extracted.
Shadow compose(const Shadow& a, const Shadow& b);

/// Same product via k' = k1 + (2 m1 + 1) k2 mod n/2.
Shadow compose_closed(const Shadow& a, const Shadow& b);

Shadow inverse(const Shadow& s);

/// Checks that xbar -> xbar^{2m+1}, ybar -> g^-1 ybar^{2m+1} g generates all of G_n.
bool is_isolated_witness(const Shadow& s);

/// 2m + 1 mod K_ord.
Int chi_vir_n(const Shadow& s);
/// 2m + 1 mod 2n.
Int chi_2n(const Shadow& s);

/// Lemma witness (h1, h2, h3) for a shadow.
LemmaWitness lemma_witness(const Shadow& s);

}  // namespace gtsh
