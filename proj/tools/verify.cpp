#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "commands.hpp"

#include "gtsh/aff2.hpp"
#include "gtsh/dihedral.hpp"
#include "gtsh/lochak_schneps.hpp"
#include "gtsh/poset.hpp"
#include "gtsh/shadow.hpp"
#include "gtsh/structure.hpp"

namespace gtsh::cli {

namespace {

using Check = std::function<std::string()>;  // empty string on success

constexpr std::size_t kExhaustivePairs = 256;
constexpr std::size_t kExhaustiveTriples = 32;
constexpr int kSamples = 10000;
constexpr std::uint64_t kSampleSeed = 0x67747368;

std::string check_enumeration(Int n, Int bound) {
  if (n > bound) return {};
  const auto brute = enumerate_brute(n, bound);
  const auto closed = enumerate_closed(n);
  if (brute != closed)
    return "brute force found " + std::to_string(brute.size()) + " shadows, closed form " +
           std::to_string(closed.size());
  return {};
}

std::string check_gn(Int n) {
  const std::array<DihTriple, 2> gens{xbar(n), ybar(n)};
  const auto elems = bfs_closure(n, gens);
  const auto size = static_cast<Int>(elems.size());
  if (size != gn_order(n)) return "bfs |G_n| = " + std::to_string(size);
  if (size != index_pb3(n)) return "index mismatch";
  for (const auto& t : elems) {
    if (!gn_membership(t)) return "member rejected: " + t.to_string();
  }
  return {};
}

std::string check_commutator(Int n) {
  const Word x = Word::x(), y = Word::y();
  std::vector<DihTriple> gens;
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b) gens.push_back(psi_eval(n, commutator(power(x, a), power(y, b))));
  const auto comm = bfs_closure(n, gens);
  const Int o = ord_r2(n);
  const Int expected = (n % 4 == 0) ? o * o * o / 4 : o * o * o;
  if (static_cast<Int>(comm.size()) != expected) return "|[G_n,G_n]| = " + std::to_string(comm.size());
  for (const auto& t : comm) {
    const auto c = comm_membership(t);
    if (!c) return "commutator rejected: " + t.to_string();
    if (psi_eval(n, comm_word(*c)) != t) return "comm_word mismatch at " + c->to_string();
  }
  return {};
}

std::string check_group(Int n) {
  const auto elems = enumerate_closed(n);
  const Shadow e = Shadow::identity(n);
  for (const auto& a : elems) {
    if (compose(a, e) != a || compose(e, a) != a) return "identity fails at " + a.label();
    const Shadow inv = inverse(a);
    if (compose(a, inv) != e) return "inverse fails at " + a.label();
    if (!hexagon_check(a.n, a.m, a.g())) return "hexagon fails at " + a.label();
  }
  auto check_pair = [](const Shadow& a, const Shadow& b) -> std::string {
    const Shadow ab = compose(a, b);
    if (ab != compose_closed(a, b)) return "closed law disagrees at " + a.label() + "*" + b.label();
    if (chi_2n(ab) != mod(chi_2n(a) * chi_2n(b), 2 * ab.n)) return "chi not multiplicative";
    if (rho(ab) != rho(a) * rho(b)) return "rho not multiplicative";
    return {};
  };
  auto check_triple = [](const Shadow& a, const Shadow& b, const Shadow& c) -> std::string {
    if (compose(compose(a, b), c) != compose(a, compose(b, c)))
      return "associativity fails at " + a.label() + "," + b.label() + "," + c.label();
    return {};
  };
  if (elems.size() <= kExhaustivePairs) {
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (auto err = check_pair(a, b); !err.empty()) return err;
  }
  if (elems.size() <= kExhaustiveTriples) {
    for (const auto& a : elems)
      for (const auto& b : elems)
        for (const auto& c : elems)
          if (auto err = check_triple(a, b, c); !err.empty()) return err;
  }
  std::mt19937_64 rng(kSampleSeed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int i = 0; i < kSamples; ++i) {
    const Shadow& a = elems[pick(rng)];
    const Shadow& b = elems[pick(rng)];
    const Shadow& c = elems[pick(rng)];
    if (auto err = check_pair(a, b); !err.empty()) return err;
    if (auto err = check_triple(a, b, c); !err.empty()) return err;
  }
  return {};
}

std::string check_structure(Int n) {
  const auto elems = enumerate_closed(n);
  const auto d = structure_of(n);
  if (static_cast<Int>(elems.size()) != d.order) return "order " + std::to_string(d.order);
  if (d.order < arith_lower_bound(n)) return "below the arithmetic bound";
  std::set<AffCoord> image;
  for (const auto& s : elems) {
    const AffCoord a = rho(s);
    image.insert(a);
    if (rho_inv(a) != s) return "rho_inv fails at " + s.label();
    if (d.combine(d.component(s)) != a) return "CRT split fails at " + s.label();
  }
  if (image.size() != elems.size()) return "rho not injective";
  const Int c = canonicalize(n);
  if (c % 4 == 0) {
    std::size_t members = 0;
    for (const auto& a : semidirect_elements(c)) members += hn_membership(a);
    if (2 * members != semidirect_elements(c).size()) return "H_n is not of index 2";
    if (members != elems.size()) return "H_n differs from the image";
  }
  return {};
}

std::string check_witnesses(Int n) {
  for (const auto& s : enumerate_closed(n)) {
    if (!is_isolated_witness(s)) return "not isolated at " + s.label();
    const auto w = lemma_witness(s);
    if (!w.x_identity_holds || !w.y_identity_holds) return "lemma witness fails at " + s.label();
  }
  return {};
}

std::string check_reductions(Int n) {
  const Int c = canonicalize(n);
  for (Int target = 3; target <= c; ++target) {
    if (!poset_leq(c, target)) continue;
    const auto fibers = fiber_report(c, target);
    const std::size_t expected = enumerate_closed(c).size() / fibers.size();
    for (const auto& [t, size] : fibers)
      if (size != expected) return "fiber " + t.label() + " -> " + std::to_string(target) + " has size " +
                                   std::to_string(size);
  }
  return {};
}

std::string check_lochak_schneps(Int n) {
  if (canonicalize(n) % 3 != 0) return {};
  for (const auto& s : enumerate_closed(n)) {
    if (mod(s.m, 3) == 1) continue;
    const auto w = ls_witness(s);
    if (!ls_verify(s, w.g, w.h)) return "witness fails at " + s.label();
  }
  return {};
}

std::string check_two_adic(Int n) {
  const auto [alpha, odd] = split_two_adic(canonicalize(n));
  if (odd != 1 || alpha < 2 || alpha > kDefaultClosureBound) return {};
  const auto closure = generator_closure(alpha);
  std::vector<AffTrunc> members;
  for (const auto& a : f_elements(alpha))
    if (ftilde_membership(a)) members.push_back(a);
  if (closure != members) return "generator closure differs from Ftilde";
  for (const auto& s : enumerate_closed(n)) {
    const AffTrunc t = shadow_to_trunc(s);
    if (!ftilde_membership(t)) return "shadow outside Ftilde: " + s.label();
    if (trunc_to_shadow(t) != s) return "round trip fails at " + s.label();
  }
  return {};
}

}  // namespace

std::vector<CheckOutcome> verify_all(Int n, Int bound) {
  const std::vector<std::pair<std::string, Check>> checks{
      {"enumeration", [&] { return check_enumeration(n, bound); }},
      {"gn-order", [&] { return check_gn(n); }},
      {"commutator", [&] { return check_commutator(n); }},
      {"group-law", [&] { return check_group(n); }},
      {"structure", [&] { return check_structure(n); }},
      {"witnesses", [&] { return check_witnesses(n); }},
      {"reductions", [&] { return check_reductions(n); }},
      {"lochak-schneps", [&] { return check_lochak_schneps(n); }},
      {"two-adic", [&] { return check_two_adic(n); }},
  };
  std::vector<CheckOutcome> out;
  for (const auto& [name, check] : checks) {
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    out.push_back({name, detail.empty(), detail});
    if (!detail.empty()) break;
  }
  return out;
}

}  // namespace gtsh::cli
