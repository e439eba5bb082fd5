#pragma once

// Small integer helpers shared by every module. All moduli are positive
// machine integers; exponent arithmetic that could leave int64 range goes
// through the checked_* functions and throws instead of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace gtsh {

using Int = std::int64_t;

/// Least non-negative residue of a modulo m (m > 0).
constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

inline Int checked_neg(Int a) {
  if (a == INT64_MIN) throw std::overflow_error("integer overflow in negation");
  return -a;
}

constexpr Int gcd(Int a, Int b) { return std::gcd(a, b); }
constexpr Int lcm(Int a, Int b) { return std::lcm(a, b); }

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Int inverse_mod(Int a, Int m);

/// Euler's totient.
Int euler_phi(Int n);

/// Largest alpha with 2^alpha | n, and the odd cofactor.
struct TwoAdicSplit {
  Int alpha;
  Int odd_part;
};
TwoAdicSplit split_two_adic(Int n);

Int ipow(Int base, unsigned exp);

}  // namespace gtsh
