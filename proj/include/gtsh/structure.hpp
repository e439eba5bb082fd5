#pragma once

// GT(K^(n)) as a subgroup of Z/n1 x| (Z/2n)^x (n even, n1 = n/2), and its
// splitting Aff(Z/n0) x (Z_2 or Htilde_alpha) for n = 2^alpha n0.

#include <string>
#include <vector>

#include "gtsh/arith.hpp"
#include "gtsh/shadow.hpp"

namespace gtsh {

/// (u - 1)/4 for u = 1 mod 4, (u + 1)/4 for u = 3 mod 4.
/// Throws std::invalid_argument for even u.
Int nu(Int u);

/// (k, u) in Z/n1 x| (Z/2n)^x with n even.
struct AffCoord {
  Int n = 4;
  Int k = 0;  // [0, n/2)
  Int u = 1;  // odd, [1, 2n)

  /// Normalizes and checks gcd(u, 2n) = 1. Throws std::invalid_argument.
  static AffCoord make(Int n, Int k, Int u);
  static AffCoord identity(Int n) { return {n, 0, 1}; }

  friend AffCoord operator*(const AffCoord& a, const AffCoord& b);
  AffCoord inverse() const;
  friend bool operator==(const AffCoord&, const AffCoord&) = default;
  friend auto operator<=>(const AffCoord&, const AffCoord&) = default;
};

/// Every element of Z/n1 x| (Z/2n)^x, sorted.
std::vector<AffCoord> semidirect_elements(Int n);

AffCoord rho(const Shadow& s);
/// Throws std::invalid_argument if 4 | n and a is outside H_n.
Shadow rho_inv(const AffCoord& a);

/// k = nu(u) mod 2. Throws std::invalid_argument when 4 does not divide n.
bool hn_membership(const AffCoord& a);

/// Image of a shadow under the CRT splitting.
struct ComponentImage {
  Int aff_k;    // mod n0
  Int aff_u;    // unit mod n0
  Int two_k;    // mod 2^{alpha-1} (0 when alpha < 2)
  Int two_u;    // unit mod 2^{alpha+1} (mod 4 when alpha < 2)
};

struct StructureDescriptor {
  Int n;
  Int n0;
  Int alpha;
  std::vector<std::string> factors;
  Int order;

  /// The canonical modulus the component map works in.
  Int canonical;

  /// Splits rho(s) along Z/n1 x| (Z/2n)^x = Aff(Z/n0) x (Z/2^{a-1} x| (Z/2^{a+1})^x).
  ComponentImage component(const Shadow& s) const;
  /// Recombines components with the CRT idempotents.
  AffCoord combine(const ComponentImage& c) const;
};

StructureDescriptor structure_of(Int n);

/// |PB_3 : K^(n)|: 4 n^3 for odd n, 4 (n/2)^3 for even n.
Int index_pb3(Int n);

/// 2 phi(n0) for alpha in {0, 1}; 2^{2 alpha - 2} phi(n0) for alpha >= 2.
Int arith_lower_bound(Int n);

/// x with x = a mod p, x = b mod q for coprime p, q, via the idempotents
/// e_p = q (q^-1 mod p), e_q = p (p^-1 mod q).
Int crt_combine(Int a, Int p, Int b, Int q);

}  // namespace gtsh
