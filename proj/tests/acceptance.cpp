// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtsh/aff2.hpp"
#include "gtsh/dihedral.hpp"
#include "gtsh/lochak_schneps.hpp"
#include "gtsh/poset.hpp"
#include "gtsh/shadow.hpp"
#include "gtsh/structure.hpp"
#include "oracles.hpp"

using namespace gtsh;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string str(Int v) { return std::to_string(v); }

oracle::T to_oracle(const DihTriple& t) {
  oracle::T o;
  for (int i = 0; i < 3; ++i) o[i] = {t.c[i].rot, t.c[i].flip};
  return o;
}

std::string enumeration() {
  for (Int n = 3; n <= 16; ++n) {
    const auto brute = enumerate_brute(n);
    const auto closed = enumerate_closed(n);
    require(std::set<Shadow>(brute.begin(), brute.end()) == std::set<Shadow>(closed.begin(), closed.end()),
            "n=" + str(n) + ": brute " + str(static_cast<Int>(brute.size())) + " vs closed " +
                str(static_cast<Int>(closed.size())));
  }
  return "n=3..16 brute = closed";
}

std::string orders() {
  std::ostringstream os;
  for (Int a = 2; a <= 6; ++a) {
    const Int n = Int{1} << a;
    const Int expected = Int{1} << (2 * a - 2);
    const auto closed = static_cast<Int>(enumerate_closed(n).size());
    require(closed == expected, "|GT(K^(" + str(n) + "))| = " + str(closed));
    require(structure_of(n).order == expected, "structure_of(" + str(n) + ")");
    if (n <= 32) require(static_cast<Int>(enumerate_brute(n, 32).size()) == expected, "brute " + str(n));
    os << n << ":" << closed << " ";
  }
  for (const auto& [n, want] : {std::pair<Int, Int>{6, 12}, {12, 24}}) {
    require(static_cast<Int>(enumerate_closed(n).size()) == want, "|GT(K^(" + str(n) + "))|");
    require(static_cast<Int>(enumerate_brute(n).size()) == want, "brute |GT(K^(" + str(n) + "))|");
    require(structure_of(n).order == want, "structure_of(" + str(n) + ")");
    os << n << ":" << want << " ";
  }
  return os.str();
}

void axioms_on(const Shadow& a, const Shadow& b, const Shadow& c,
               const std::set<Shadow>& set) {
  const Shadow ab = compose(a, b);
  require(set.count(ab) > 0, "closure fails at " + a.label() + "*" + b.label());
  require(compose(ab, c) == compose(a, compose(b, c)),
          "associativity fails at " + a.label() + "," + b.label() + "," + c.label());
}

std::string group_axioms() {
  for (Int n : {4, 6, 8}) {
    const auto elems = enumerate_closed(n);
    const std::set<Shadow> set(elems.begin(), elems.end());
    const Shadow e = Shadow::make(n, 0, 0);
    for (const auto& a : elems) {
      require(compose(a, e) == a && compose(e, a) == a, "identity at " + a.label());
      const Shadow inv = inverse(a);
      require(set.count(inv) && compose(a, inv) == e && compose(inv, a) == e, "inverse at " + a.label());
      for (const auto& b : elems)
        for (const auto& c : elems) axioms_on(a, b, c, set);
    }
  }
  std::mt19937_64 rng(20261015);
  for (Int n : {12, 16}) {
    const auto elems = enumerate_closed(n);
    const std::set<Shadow> set(elems.begin(), elems.end());
    const Shadow e = Shadow::make(n, 0, 0);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 10000; ++i) {
      const Shadow &a = elems[pick(rng)], &b = elems[pick(rng)], &c = elems[pick(rng)];
      axioms_on(a, b, c, set);
      require(compose(a, e) == a && compose(e, a) == a, "identity at " + a.label());
      require(compose(a, inverse(a)) == e && compose(inverse(a), a) == e, "inverse at " + a.label());
    }
  }
  return "exhaustive n=4,6,8; 10^4 random triples n=12,16";
}

std::string rho_iso() {
  std::ostringstream os;
  for (Int n : {6, 8, 12, 16}) {
    const auto elems = enumerate_closed(n);
    for (const auto& a : elems)
      for (const auto& b : elems) require(rho(compose(a, b)) == rho(a) * rho(b), "homomorphism at n=" + str(n));
    std::set<AffCoord> image;
    for (const auto& s : elems) image.insert(rho(s));
    require(image.size() == elems.size(), "injectivity at n=" + str(n));
    const auto full = semidirect_elements(n);
    if (n % 4 != 0) {
      require(image == std::set<AffCoord>(full.begin(), full.end()), "not onto the semidirect product, n=" + str(n));
      os << n << ":full ";
    } else {
      std::set<AffCoord> hn;
      for (const auto& a : full)
        if (hn_membership(a)) hn.insert(a);
      require(2 * hn.size() == full.size(), "H_n index at n=" + str(n));
      require(image == hn, "image differs from H_n at n=" + str(n));
      os << n << ":H_n(index 2) ";
    }
  }
  return os.str();
}

std::string index_cross_check() {
  for (Int q = 3; q <= 12; ++q) {
    const auto bfs = static_cast<Int>(oracle::gn(q).size());
    const Int formula = q % 2 ? 4 * q * q * q : 4 * (q / 2) * (q / 2) * (q / 2);
    require(gn_order(q) == bfs && bfs == formula && index_pb3(q) == formula, "q=" + str(q) + " bfs=" + str(bfs));
    if (q % 2 == 1) {
      require(gn_order(q) == gn_order(2 * q), "collapse K^(" + str(q) + ") = K^(" + str(2 * q) + ")");
      require(enumerate_closed(q) == enumerate_closed(2 * q), "shadow sets differ for " + str(q));
    }
  }
  require(index_pb3(3) == 108, "|PB3:K^(3)|");
  return "q=3..12, |PB3:K^(3)| = 108";
}

std::string commutators() {
  for (Int n = 3; n <= 12; ++n) {
    const auto ref = oracle::commutators(n);
    std::set<oracle::T> mine;
    const Int o = ord_r2(n);
    for (Int a = 0; a < o; ++a)
      for (Int b = 0; b < o; ++b)
        for (Int c = 0; c < o; ++c) {
          DihTriple t = DihTriple::identity(n);
          t.c[0].rot = mod(2 * a, n);
          t.c[1].rot = mod(2 * b, n);
          t.c[2].rot = mod(2 * c, n);
          const bool same_parity = a % 2 == b % 2 && b % 2 == c % 2;
          const bool member = comm_membership(t).has_value();
          require(member == (n % 4 != 0 || same_parity), "parity clause at n=" + str(n));
          if (member) mine.insert(to_oracle(t));
        }
    for (const auto& t : ref) {
      DihTriple d = DihTriple::identity(n);
      for (int i = 0; i < 3; ++i) d.c[i] = DihElt{n, t[i].a, t[i].f};
      require(comm_membership(d).has_value(), "closure element rejected at n=" + str(n));
    }
    require(mine == ref, "n=" + str(n) + " membership " + str(static_cast<Int>(mine.size())) + " vs closure " +
                             str(static_cast<Int>(ref.size())));
  }
  return "n=3..12";
}

std::string reductions() {
  int pairs = 0;
  for (Int q = 3; q <= 24; ++q)
    for (Int n = 3; n <= 2 * q; ++n) {
      if (!poset_leq(q, n)) continue;
      const auto fibers = fiber_report(q, n);
      const std::size_t first = fibers.begin()->second;
      for (const auto& [t, size] : fibers) {
        require(size > 0, "empty fiber over " + t.label() + " for (" + str(q) + "," + str(n) + ")");
        require(size == first, "nonuniform fibers for (" + str(q) + "," + str(n) + ")");
      }
      ++pairs;
    }
  return std::to_string(pairs) + " comparable pairs";
}

std::string ls_witnesses() {
  int count = 0;
  for (Int n : {6, 12, 24})
    for (const auto& s : enumerate_closed(n)) {
      const auto w = ls_witness(s);
      require(ls_verify(s, w.g, w.h), "witness fails at n=" + str(n) + " " + s.label());
      ++count;
    }
  for (Int n : {6, 12})
    for (const auto& s : enumerate_closed(n))
      require(ls_exists_brute(n, s.m, s.g()), "brute search fails at n=" + str(n) + " " + s.label());
  return std::to_string(count) + " shadows verified, brute n=6,12";
}

std::string profinite() {
  for (Int alpha = 2; alpha <= 8; ++alpha) {
    const auto closure = generator_closure(alpha);
    std::vector<AffTrunc> ft, ker;
    for (const auto& a : f_elements(alpha)) {
      if (ftilde_membership(a)) ft.push_back(a);
      if (psi_map(a) == 0) ker.push_back(a);
    }
    require(closure == ft && ft == ker, "alpha=" + str(alpha));
    require(closure.size() == std::size_t{1} << (2 * alpha - 2), "order at alpha=" + str(alpha));
  }
  for (Int alpha = 2; alpha <= 5; ++alpha) {
    const Int n = Int{1} << alpha;
    const auto elems = enumerate_closed(n);
    std::set<AffTrunc> image;
    for (const auto& s : elems) {
      const AffTrunc t = shadow_to_trunc(s);
      image.insert(t);
      require(trunc_to_shadow(t) == s, "round trip at " + s.label());
      if (alpha > 2)
        require(project(t, alpha - 1) == shadow_to_trunc(reduce_shadow(s, n / 2)), "projection at " + s.label());
    }
    for (const auto& a : elems)
      for (const auto& b : elems)
        require(shadow_to_trunc(compose(a, b)) == aff_mul(shadow_to_trunc(a), shadow_to_trunc(b)),
                "homomorphism at alpha=" + str(alpha));
    const auto closure = generator_closure(alpha);
    require(image == std::set<AffTrunc>(closure.begin(), closure.end()), "bijection at alpha=" + str(alpha));
  }
  return "alpha=2..8 closure = Ftilde = ker; isomorphism alpha=2..5";
}

std::string lower_bound() {
  for (Int a = 2; a <= 6; ++a) {
    const Int n = Int{1} << a;
    require(arith_lower_bound(n) == structure_of(n).order, "2^" + str(a));
  }
  const Int b12 = arith_lower_bound(12), o12 = structure_of(12).order;
  require(b12 == 8 && o12 == 24 && b12 <= o12, "n=12");
  return "n=12: bound " + str(b12) + " <= order " + str(o12);
}

struct Criterion {
  const char* name;
  std::function<std::string()> run;
  double budget_s;  // 0: no time bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"enumeration-equivalence", enumeration, 10},
      {"order-formulas", orders, 0},
      {"group-axioms", group_axioms, 0},
      {"rho-isomorphism", rho_iso, 0},
      {"index-order-cross-check", index_cross_check, 30},
      {"commutator-characterization", commutators, 0},
      {"reduction-surjectivity", reductions, 0},
      {"ls-witnesses", ls_witnesses, 60},
      {"profinite-truncations", profinite, 0},
      {"lower-bound-arithmetic", lower_bound, 0},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_s > 0 && secs > c.budget_s) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    failures += !ok;
    std::printf("%s %2d %-28s %7.3fs  %s\n", ok ? "PASS" : "FAIL", index, c.name, secs, detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
