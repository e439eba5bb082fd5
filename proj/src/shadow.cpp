#include "gtsh/shadow.hpp"

#include <algorithm>
#include <sstream>

#include "gtsh/poset.hpp"

namespace gtsh {

Shadow Shadow::make(Int n, Int m, Int k) {
  const Int canon = canonicalize(n);
  Shadow s{canon, mod(m, canon), mod(k, canon / 2)};
  if (gcd(2 * s.m + 1, canon) != 1) {
    throw std::invalid_argument("shadow: 2m+1 must be a unit mod " + std::to_string(canon) +
                                " (m=" + std::to_string(m) + ")");
  }
  if (canon % 4 == 0 && mod(s.k, 2) != mod(kappa(s.m) / 2, 2)) {
    throw std::invalid_argument("shadow: k must be congruent to kappa(m)/2 mod 2 when 4 | n (m=" +
                                std::to_string(s.m) + ", k=" + std::to_string(s.k) + ")");
  }
  return s;
}

Shadow Shadow::identity(Int n) { return make(n, 0, 0); }

CommTriple Shadow::g() const { return CommTriple::make(n, k, -k, kappa(m) / 2); }

Word Shadow::representative_word() const { return Word::x(2 * k) * Word::y(-2 * k) * Word::z(kappa(m)); }

std::string Shadow::label() const { return std::to_string(m) + "." + std::to_string(k); }

bool hexagon_check(Int n, Int m, const CommTriple& g) {
  if (g.n != n) throw std::invalid_argument("hexagon_check: modulus mismatch");
  const DihTriple gt = g.to_triple();
  const auto back = comm_membership(gt);
  if (!back || *back != g) throw NotMemberError("hexagon_check: g is not in [G_n, G_n]: " + g.to_string());

  if (!(gt * gn_theta(gt)).is_identity()) return false;

  const DihTriple w = pow(ybar(n), m) * gt;
  const DihTriple tw = gn_tau(w);
  return (gn_tau(tw) * tw * w).is_identity();
}

bool charming_check(Int n, Int m, const DihTriple& g) {
  if (g.modulus() != n) throw std::invalid_argument("charming_check: modulus mismatch");
  const Int ko = k_ord(n);
  if (gcd(mod(2 * m + 1, ko), ko) != 1) return false;
  return comm_membership(g).has_value();
}

Shadow shadow_from_pair(Int n, Int m, const DihTriple& g) {
  const auto c = comm_membership(g);
  if (!c) throw std::logic_error("shadow_from_pair: g is not in [G_n, G_n]: " + g.to_string());
  const Int o = ord_r2(n);
  const Int k = c->e[0];
  if (c->e[1] != mod(-k, o) || g.c[2].rot != mod(kappa(m), n)) {
    throw std::logic_error("shadow_from_pair: g is not of the form (r^2k, r^-2k, r^kappa(m)): m=" +
                           std::to_string(m) + " g=" + g.to_string());
  }
  return Shadow::make(n, m, k);
}

std::vector<Shadow> enumerate_brute(Int n, Int bound) {
  if (n < 3) throw std::invalid_argument("enumerate_brute: modulus must be >= 3");
  if (n > bound) {
    throw std::out_of_range("enumerate_brute: modulus " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  }
  const Int ko = k_ord(n);
  const Int o = ord_r2(n);
  std::vector<Shadow> out;
  for (Int m = 0; m < ko; ++m) {
    for (Int e1 = 0; e1 < o; ++e1)
      for (Int e2 = 0; e2 < o; ++e2)
        for (Int e3 = 0; e3 < o; ++e3) {
          if (n % 4 == 0 && !(e1 % 2 == e2 % 2 && e2 % 2 == e3 % 2)) continue;
          const CommTriple g{n, {e1, e2, e3}};
          if (!charming_check(n, m, g.to_triple())) continue;
          if (!hexagon_check(n, m, g)) continue;
          out.push_back(shadow_from_pair(n, m, g.to_triple()));
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Shadow> enumerate_closed(Int n) {
  const Int canon = canonicalize(n);
  std::vector<Shadow> out;
  for (Int m = 0; m < canon; ++m) {
    if (gcd(2 * m + 1, canon) != 1) continue;
    for (Int k = 0; k < canon / 2; ++k) {
      if (canon % 4 == 0 && mod(k, 2) != mod(kappa(m) / 2, 2)) continue;
      out.push_back(Shadow{canon, m, k});
    }
  }
  return out;
}

Shadow compose(const Shadow& a, const Shadow& b) {
  if (a.n != b.n) throw std::invalid_argument("compose: target mismatch");
  const Int n = a.n;
  // psi_n(f1 E(f2)), pushed through psi_n one syllable of f2 at a time.
  const DihTriple f1 = psi_eval(n, a.representative_word());
  const DihTriple f1_inv = f1.inverse();
  const DihTriple gx = xbar(n), gy = ybar(n);
  const Int u = 2 * a.m + 1;
  DihTriple out = f1;
  const Word f2 = b.representative_word();
  for (const auto& syl : f2.syllables()) {
    const Int e = mod(u * mod(syl.exp, 2 * n), 2 * n);
    out = syl.gen == Gen::X ? out * pow(gx, e) : out * f1_inv * pow(gy, e) * f1;
  }
  const Int m = mod(2 * a.m * b.m + a.m + b.m, n);
  return shadow_from_pair(n, m, out);
}

Shadow compose_closed(const Shadow& a, const Shadow& b) {
  if (a.n != b.n) throw std::invalid_argument("compose_closed: target mismatch");
  const Int n = a.n;
  return Shadow::make(n, 2 * a.m * b.m + a.m + b.m, a.k + (2 * a.m + 1) * b.k);
}

Shadow inverse(const Shadow& s) {
  const Int two_n = 2 * s.n;
  const Int u_inv = inverse_mod(s.u(), two_n);
  const Int k = mod(-u_inv * s.k, s.n1());
  return Shadow::make(s.n, (u_inv - 1) / 2, k);
}

bool is_isolated_witness(const Shadow& s) {
  const Int n = s.n;
  const Int u = 2 * s.m + 1;
  const DihTriple g = s.g().to_triple();
  const std::array<DihTriple, 2> images{pow(xbar(n), u), g.inverse() * pow(ybar(n), u) * g};
  return static_cast<Int>(bfs_closure(n, images).size()) == gn_order(n);
}

Int chi_vir_n(const Shadow& s) { return mod(2 * s.m + 1, k_ord(s.n)); }

Int chi_2n(const Shadow& s) { return s.u(); }

LemmaWitness lemma_witness(const Shadow& s) { return lemma_witness(s.m, s.g()); }

}  // namespace gtsh
