#pragma once

// The dihedral group D_n = <r, s | r^n, s^2, srsr>, its cube D_n^3, and the
// subgroup G_n = <xbar, ybar> of D_n^3 cut out by
//
//   xbar = (r, s, s),  ybar = (rs, r, rs)
//
// together with the commutator subgroup [G_n, G_n] and constructive words for
// its elements.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtsh/arith.hpp"
#include "gtsh/word.hpp"

namespace gtsh {

/// Raised when an element is required to lie in G_n or [G_n, G_n] and does not.
class NotMemberError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// r^rot s^flip in D_n.
struct DihElt {
  Int n = 3;
  Int rot = 0;
  int flip = 0;

  static DihElt identity(Int n) { return {n, 0, 0}; }
  static DihElt r(Int n, Int e = 1) { return {n, mod(e, n), 0}; }
  static DihElt s(Int n) { return {n, 0, 1}; }

  DihElt inverse() const;
  friend DihElt operator*(const DihElt& a, const DihElt& b);
  friend bool operator==(const DihElt&, const DihElt&) = default;
  std::string to_string() const;
};

struct DihTriple {
  std::array<DihElt, 3> c;

  static DihTriple identity(Int n);
  Int modulus() const { return c[0].n; }
  bool is_identity() const;

  DihTriple inverse() const;
  friend DihTriple operator*(const DihTriple& a, const DihTriple& b);
  friend bool operator==(const DihTriple&, const DihTriple&) = default;

  /// `(r^a s^e, r^b s^f, r^c s^g)`
  std::string to_string() const;

  /// Dense index in [0, (2n)^3), for visited-sets during closures.
  std::size_t index() const;
};

DihTriple pow(const DihTriple& t, Int e);

/// ord(r^2) in D_n: n for odd n, n/2 for even n.
constexpr Int ord_r2(Int n) { return n % 2 == 0 ? n / 2 : n; }

/// (r^{2 e1}, r^{2 e2}, r^{2 e3}) with exponents mod ord(r^2).
struct CommTriple {
  Int n = 3;
  std::array<Int, 3> e{0, 0, 0};

  /// Normalizes exponents; throws std::invalid_argument if the 4 | n parity
  /// condition fails.
  static CommTriple make(Int n, Int e1, Int e2, Int e3);

  DihTriple to_triple() const;
  /// `[n1,n2,n3]@n`
  std::string to_string() const;
  friend bool operator==(const CommTriple&, const CommTriple&) = default;
};

/// Images of the generators under psi_n.
DihTriple xbar(Int n);
DihTriple ybar(Int n);

/// psi_n(w) for w in F2.
DihTriple psi_eval(Int n, const Word& w);

/// Coset representative of G_n / J_n, J_n = <r^2>^3.
enum class Coset { One, X, Y, XY };

/// The word (1, x, y or xy) representing a coset.
Word coset_word(Coset c);
const char* coset_name(Coset c);

struct GnDecomposition {
  /// Rotation exponents of J (each a multiple of 2 when n is even).
  std::array<Int, 3> j_rot;
  Coset eps;
};

/// t = J * eps with J in <r^2>^3; nullopt when t is not in G_n.
std::optional<GnDecomposition> gn_decompose(const DihTriple& t);
bool gn_membership(const DihTriple& t);

/// |G_n| from the closed formula 4 ord(r^2)^3.
Int gn_order(Int n);

/// Breadth-first closure of a generating set inside D_n^3. Throws
/// std::logic_error if the visit count ever exceeds |D_n^3|.
std::vector<DihTriple> bfs_closure(Int n, std::span<const DihTriple> gens);

std::optional<CommTriple> comm_membership(const DihTriple& t);

/// A word in [F2, F2] mapping to c under psi_n.
Word comm_word(const CommTriple& c);

/// Automorphisms of G_n induced by theta and tau. Throw NotMemberError for t outside G_n.
DihTriple gn_theta(const DihTriple& t);
DihTriple gn_tau(const DihTriple& t);

// ---------------------------------------------------------------------------
// Permutation witness for the kernel lemma.

/// A permutation of Z/nZ as an image table, composed right-to-left.
struct Perm {
  std::vector<Int> img;

  static Perm identity(Int n);
  static Perm from_dihedral(const DihElt& d);
  Int degree() const { return static_cast<Int>(img.size()); }
  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
};

struct LemmaWitness {
  std::array<Perm, 3> h;
  bool x_identity_holds;  // xbar^(2m+1) = h xbar h^-1
  bool y_identity_holds;  // g^-1 ybar^(2m+1) g = h ybar h^-1
};

/// Builds (h1, h2, h3) for a shadow datum (m, g) with g = (r^{2k}, r^{-2k}, r^{kappa(m)})
/// and checks both conjugation identities in S_n^3, using g itself on the
/// right-hand side. Throws std::domain_error if gcd(2m+1, n) != 1.
LemmaWitness lemma_witness(Int m, const CommTriple& g);

}  // namespace gtsh
