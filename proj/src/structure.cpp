#include "gtsh/structure.hpp"

#include <stdexcept>

#include "gtsh/poset.hpp"

namespace gtsh {

Int nu(Int u) {
  if (mod(u, 2) == 0) throw std::invalid_argument("nu: argument must be odd");
  return mod(u, 4) == 1 ? (u - 1) / 4 : (u + 1) / 4;
}

AffCoord AffCoord::make(Int n, Int k, Int u) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("AffCoord: modulus must be even and >= 4");
  AffCoord a{n, mod(k, n / 2), mod(u, 2 * n)};
  if (gcd(a.u, 2 * n) != 1) throw std::invalid_argument("AffCoord: u must be a unit mod 2n");
  return a;
}

AffCoord operator*(const AffCoord& a, const AffCoord& b) {
  if (a.n != b.n) throw std::invalid_argument("AffCoord: modulus mismatch");
  const Int n1 = a.n / 2;
  return {a.n, mod(a.k + mod(a.u, n1) * b.k, n1), mod(a.u * b.u, 2 * a.n)};
}

AffCoord AffCoord::inverse() const {
  const Int u_inv = inverse_mod(u, 2 * n);
  return {n, mod(-mod(u_inv, n / 2) * k, n / 2), u_inv};
}

std::vector<AffCoord> semidirect_elements(Int n) {
  std::vector<AffCoord> out;
  for (Int k = 0; k < n / 2; ++k)
    for (Int u = 1; u < 2 * n; u += 2)
      if (gcd(u, 2 * n) == 1) out.push_back({n, k, u});
  return out;
}

AffCoord rho(const Shadow& s) { return {s.n, s.k, s.u()}; }

Shadow rho_inv(const AffCoord& a) {
  if (a.n % 4 == 0 && !hn_membership(a))
    throw std::invalid_argument("rho_inv: coordinate lies outside H_n");
  return Shadow::make(a.n, (a.u - 1) / 2, a.k);
}

bool hn_membership(const AffCoord& a) {
  if (a.n % 4 != 0) throw std::invalid_argument("hn_membership: H_n is only defined when 4 | n");
  return mod(a.k, 2) == mod(nu(a.u), 2);
}

Int crt_combine(Int a, Int p, Int b, Int q) {
  if (gcd(p, q) != 1) throw std::invalid_argument("crt_combine: moduli must be coprime");
  const Int pq = checked_mul(p, q);
  const Int e_p = mod(checked_mul(q, inverse_mod(q, p)), pq);
  const Int e_q = mod(checked_mul(p, inverse_mod(p, q)), pq);
  return mod(checked_add(checked_mul(mod(a, p), e_p), checked_mul(mod(b, q), e_q)), pq);
}

ComponentImage StructureDescriptor::component(const Shadow& s) const {
  if (s.n != canonical) throw std::invalid_argument("component: shadow modulus does not match descriptor");
  const auto [a, n0_] = split_two_adic(canonical);
  const Int two_k_mod = ipow(2, static_cast<unsigned>(a - 1));
  const Int two_u_mod = ipow(2, static_cast<unsigned>(a + 1));
  return {mod(s.k, n0_), mod(s.u(), n0_), mod(s.k, two_k_mod), mod(s.u(), two_u_mod)};
}

AffCoord StructureDescriptor::combine(const ComponentImage& c) const {
  const auto [a, n0_] = split_two_adic(canonical);
  const Int two_k_mod = ipow(2, static_cast<unsigned>(a - 1));
  const Int two_u_mod = ipow(2, static_cast<unsigned>(a + 1));
  return AffCoord::make(canonical, crt_combine(c.aff_k, n0_, c.two_k, two_k_mod),
                        crt_combine(c.aff_u, n0_, c.two_u, two_u_mod));
}

StructureDescriptor structure_of(Int n) {
  const Int canon = canonicalize(n);
  const auto [alpha, n0] = split_two_adic(n);
  StructureDescriptor d{n, n0, alpha, {}, 0, canon};
  d.factors.push_back("Aff(Z/" + std::to_string(n0) + ")");
  const Int aff_order = checked_mul(n0, euler_phi(n0));
  if (alpha < 2) {
    d.factors.push_back("Z2");
    d.order = checked_mul(2, aff_order);
  } else {
    d.factors.push_back("Htilde(" + std::to_string(alpha) + ")");
    d.order = checked_mul(aff_order, ipow(2, static_cast<unsigned>(2 * alpha - 2)));
  }
  return d;
}

Int index_pb3(Int n) {
  if (n < 3) throw std::invalid_argument("index_pb3: modulus must be >= 3");
  const Int o = n % 2 == 0 ? n / 2 : n;
  return checked_mul(4, checked_mul(o, checked_mul(o, o)));
}

Int arith_lower_bound(Int n) {
  if (n < 3) throw std::invalid_argument("arith_lower_bound: modulus must be >= 3");
  const auto [alpha, n0] = split_two_adic(n);
  if (alpha < 2) return checked_mul(2, euler_phi(n0));
  return checked_mul(ipow(2, static_cast<unsigned>(2 * alpha - 2)), euler_phi(n0));
}

}  // namespace gtsh
