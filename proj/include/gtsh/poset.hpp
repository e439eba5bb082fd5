#pragma once

// Order structure of the dihedral poset {K^(n)} and the reduction maps
// GT(K^(q)) -> GT(K^(n)) for K^(q) <= K^(n).

#include <map>
#include <vector>

#include "gtsh/arith.hpp"
#include "gtsh/shadow.hpp"

namespace gtsh {

/// n for even n, 2n for odd n. Throws std::invalid_argument for n < 3.
Int canonicalize(Int n);

struct PosetNode {
  Int n;
  Int canonical;

  static PosetNode of(Int n) { return {n, canonicalize(n)}; }
  friend bool operator==(const PosetNode& a, const PosetNode& b) { return a.canonical == b.canonical; }
};

/// K^(q) <= K^(n), i.e. n | lcm(q, 2).
bool poset_leq(Int q, Int n);

/// Reduces a shadow at its modulus q to the coarser modulus n by pushing the
/// representative word through psi_n. Throws std::invalid_argument when the
/// moduli are not comparable.
Shadow reduce_shadow(const Shadow& s, Int n);

/// Fiber sizes of the reduction GT(K^(q)) -> GT(K^(n)), keyed by the target
/// shadow. Targets with an empty fiber appear with size 0.
std::map<Shadow, std::size_t> fiber_report(Int q, Int n);

}  // namespace gtsh
