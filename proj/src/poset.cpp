#include "gtsh/poset.hpp"

#include <stdexcept>
#include <string>

namespace gtsh {

Int canonicalize(Int n) {
  if (n < 3) throw std::invalid_argument("modulus must be >= 3, got " + std::to_string(n));
  return n % 2 == 0 ? n : 2 * n;
}

bool poset_leq(Int q, Int n) {
  if (q < 3 || n < 3) throw std::invalid_argument("poset_leq: moduli must be >= 3");
  return lcm(q, 2) % n == 0;
}

Shadow reduce_shadow(const Shadow& s, Int n) {
  const Int target = canonicalize(n);
  if (!poset_leq(s.n, target)) {
    throw std::invalid_argument("reduce_shadow: K^(" + std::to_string(s.n) + ") is not contained in K^(" +
                                std::to_string(n) + ")");
  }
  return shadow_from_pair(target, mod(s.m, target), psi_eval(target, s.representative_word()));
}

std::map<Shadow, std::size_t> fiber_report(Int q, Int n) {
  if (!poset_leq(q, n)) {
    throw std::invalid_argument("fiber_report: K^(" + std::to_string(q) + ") is not contained in K^(" +
                                std::to_string(n) + ")");
  }
  std::map<Shadow, std::size_t> fibers;
  for (const auto& t : enumerate_closed(n)) fibers[t] = 0;
  for (const auto& s : enumerate_closed(q)) {
    auto it = fibers.find(reduce_shadow(s, n));
    if (it == fibers.end()) throw std::logic_error("fiber_report: reduction left GT(K^(n))");
    ++it->second;
  }
  return fibers;
}

}  // namespace gtsh
