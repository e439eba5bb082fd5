#pragma once

// Finite levels of Aff(Z_2): F(alpha) = Z/2^{alpha-1} x| (Z/2^{alpha+1})^x for
// alpha >= 2, the index-2 subgroups Ftilde(alpha) = {(k, (-1)^a 5^b) : k = b mod 2},
// and compatible towers standing in for elements of the inverse limit.

#include <optional>
#include <vector>

#include "gtsh/arith.hpp"
#include "gtsh/shadow.hpp"

namespace gtsh {

/// Largest level the truncation helpers accept.
inline constexpr Int kMaxAffLevel = 30;
/// Default largest level for generator_closure.
inline constexpr Int kDefaultClosureBound = 10;

struct AffTrunc {
  Int alpha = 2;
  Int k = 0;  // mod 2^{alpha-1}
  Int u = 1;  // odd, mod 2^{alpha+1}

  /// Normalizes; throws std::invalid_argument for alpha out of range or even u.
  static AffTrunc make(Int alpha, Int k, Int u);
  static AffTrunc identity(Int alpha) { return {alpha, 0, 1}; }

  Int k_modulus() const { return Int{1} << (alpha - 1); }
  Int u_modulus() const { return Int{1} << (alpha + 1); }

  friend bool operator==(const AffTrunc&, const AffTrunc&) = default;
  friend auto operator<=>(const AffTrunc&, const AffTrunc&) = default;
};

AffTrunc aff_mul(const AffTrunc& a, const AffTrunc& b);
AffTrunc aff_inv(const AffTrunc& a);
/// Reduces a to a lower level. Throws std::invalid_argument if level > a.alpha.
AffTrunc project(const AffTrunc& a, Int level);

struct UnitLog {
  Int a;  // sign exponent, 0 or 1
  Int b;  // exponent of 5, mod 2^{alpha-1}
};

/// u = (-1)^a 5^b mod 2^{alpha+1}, looked up in a per-level table.
UnitLog unit_decompose(Int u, Int alpha);

/// (k mod 2) + b mod 2, computed at level 2.
int psi_map(const AffTrunc& a);

/// k = b mod 2.
bool ftilde_membership(const AffTrunc& a);

/// Every element of F(alpha), sorted.
std::vector<AffTrunc> f_elements(Int alpha);

/// Closure of the truncations of (2,1), (1,5), (0,-1), sorted.
/// Throws std::out_of_range if alpha exceeds bound.
std::vector<AffTrunc> generator_closure(Int alpha, Int bound = kDefaultClosureBound);

/// (k mod 2^{alpha-1}, 2m+1 mod 2^{alpha+1}) for a shadow with n = 2^alpha, alpha >= 2.
AffTrunc shadow_to_trunc(const Shadow& s);
Shadow trunc_to_shadow(const AffTrunc& a);

struct Tower {
  std::vector<AffTrunc> levels;  // levels[i].alpha == i + 2

  Int top() const { return static_cast<Int>(levels.size()) + 1; }
};

/// Builds a tower from (k, u) pairs for levels 2, 3, ..., normalizing each.
Tower tower_build(const std::vector<std::pair<Int, Int>>& per_level);

/// The tower of projections of a single element (k, u) of Aff(Z_2), levels 2..top.
Tower tower_from_element(Int k, Int u, Int top);

struct TowerCheck {
  bool valid;
  /// First level alpha whose entry does not project onto entry alpha - 1.
  std::optional<Int> failing_level;
};

TowerCheck tower_check(const Tower& t);

}  // namespace gtsh
