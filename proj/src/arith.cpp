#include "gtsh/arith.hpp"

namespace gtsh {

Int inverse_mod(Int a, Int m) {
  if (m <= 0) throw std::invalid_argument("inverse_mod: modulus must be positive");
  if (m == 1) return 0;
  Int old_r = mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: argument is not a unit");
  return mod(old_s, m);
}

Int euler_phi(Int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  Int result = n;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

TwoAdicSplit split_two_adic(Int n) {
  if (n <= 0) throw std::invalid_argument("split_two_adic: n must be positive");
  Int alpha = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++alpha;
  }
  return {alpha, n};
}

Int ipow(Int base, unsigned exp) {
  Int out = 1;
  while (exp-- > 0) out = checked_mul(out, base);
  return out;
}

}  // namespace gtsh
