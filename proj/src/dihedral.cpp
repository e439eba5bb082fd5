#include "gtsh/dihedral.hpp"

#include <deque>
#include <sstream>

namespace gtsh {

// ---------------------------------------------------------------------------
// D_n

DihElt DihElt::inverse() const {
  if (flip) return *this;
  return {n, mod(-rot, n), 0};
}

DihElt operator*(const DihElt& a, const DihElt& b) {
  if (a.n != b.n) throw std::invalid_argument("dihedral: modulus mismatch");
  const Int rot = a.flip ? a.rot - b.rot : a.rot + b.rot;
  return {a.n, mod(rot, a.n), a.flip ^ b.flip};
}

std::string DihElt::to_string() const { return "r^" + std::to_string(rot) + " s^" + std::to_string(flip); }

// ---------------------------------------------------------------------------
// D_n^3

DihTriple DihTriple::identity(Int n) {
  const auto e = DihElt::identity(n);
  return {{e, e, e}};
}

bool DihTriple::is_identity() const {
  for (const auto& d : c)
    if (d.rot != 0 || d.flip != 0) return false;
  return true;
}

DihTriple DihTriple::inverse() const { return {{c[0].inverse(), c[1].inverse(), c[2].inverse()}}; }

DihTriple operator*(const DihTriple& a, const DihTriple& b) {
  return {{a.c[0] * b.c[0], a.c[1] * b.c[1], a.c[2] * b.c[2]}};
}

std::string DihTriple::to_string() const {
  std::ostringstream os;
  os << '(' << c[0].to_string() << ", " << c[1].to_string() << ", " << c[2].to_string() << ')';
  return os.str();
}

std::size_t DihTriple::index() const {
  const auto side = static_cast<std::size_t>(2 * modulus());
  std::size_t idx = 0;
  for (const auto& d : c) idx = idx * side + static_cast<std::size_t>(2 * d.rot + d.flip);
  return idx;
}

DihTriple pow(const DihTriple& t, Int e) {
  DihTriple base = e < 0 ? t.inverse() : t;
  Int k = e < 0 ? -e : e;
  DihTriple out = DihTriple::identity(t.modulus());
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// psi_n

DihTriple xbar(Int n) { return {{DihElt::r(n), DihElt::s(n), DihElt::s(n)}}; }

DihTriple ybar(Int n) {
  const DihElt rs{n, mod(1, n), 1};
  return {{rs, DihElt::r(n), rs}};
}

DihTriple psi_eval(Int n, const Word& w) {
  if (n < 3) throw std::invalid_argument("psi_eval: modulus must be >= 3");
  const DihTriple gx = xbar(n), gy = ybar(n);
  DihTriple out = DihTriple::identity(n);
  for (const auto& s : w.syllables()) {
    // Both generators have order dividing 2n, so the exponent can be reduced first.
    out = out * pow(s.gen == Gen::X ? gx : gy, mod(s.exp, 2 * n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// G_n

namespace {

struct CosetEntry {
  Coset eps;
  std::array<int, 3> flips;
};

constexpr std::array<CosetEntry, 4> kCosetTable{{
    {Coset::One, {0, 0, 0}},
    {Coset::X, {0, 1, 1}},
    {Coset::Y, {1, 0, 1}},
    {Coset::XY, {1, 1, 0}},
}};

}  // namespace

Word coset_word(Coset c) {
  switch (c) {
    case Coset::One: return {};
    case Coset::X: return Word::x();
    case Coset::Y: return Word::y();
    case Coset::XY: return Word::x() * Word::y();
  }
  return {};
}

const char* coset_name(Coset c) {
  switch (c) {
    case Coset::One: return "1";
    case Coset::X: return "x";
    case Coset::Y: return "y";
    case Coset::XY: return "xy";
  }
  return "?";
}

std::optional<GnDecomposition> gn_decompose(const DihTriple& t) {
  const Int n = t.modulus();
  for (const auto& entry : kCosetTable) {
    if (t.c[0].flip != entry.flips[0] || t.c[1].flip != entry.flips[1] || t.c[2].flip != entry.flips[2])
      continue;
    const DihTriple j = t * psi_eval(n, coset_word(entry.eps)).inverse();
    GnDecomposition out{{j.c[0].rot, j.c[1].rot, j.c[2].rot}, entry.eps};
    if (n % 2 == 0)
      for (Int r : out.j_rot)
        if (r % 2 != 0) return std::nullopt;
    return out;
  }
  return std::nullopt;
}

bool gn_membership(const DihTriple& t) { return gn_decompose(t).has_value(); }

Int gn_order(Int n) {
  if (n < 3) throw std::invalid_argument("gn_order: modulus must be >= 3");
  const Int o = ord_r2(n);
  return checked_mul(4, checked_mul(o, checked_mul(o, o)));
}

std::vector<DihTriple> bfs_closure(Int n, std::span<const DihTriple> gens) {
  const std::size_t side = static_cast<std::size_t>(2 * n);
  const std::size_t cap = side * side * side;
  std::vector<char> seen(cap, 0);
  std::vector<DihTriple> out;
  std::deque<DihTriple> queue;

  const DihTriple e = DihTriple::identity(n);
  seen[e.index()] = 1;
  out.push_back(e);
  queue.push_back(e);
  while (!queue.empty()) {
    const DihTriple cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const DihTriple next = cur * g;
      const std::size_t idx = next.index();
      if (seen[idx]) continue;
      seen[idx] = 1;
      out.push_back(next);
      if (out.size() > cap) throw std::logic_error("bfs_closure: exceeded |D_n^3|");
      queue.push_back(next);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// [G_n, G_n]

CommTriple CommTriple::make(Int n, Int e1, Int e2, Int e3) {
  if (n < 3) throw std::invalid_argument("CommTriple: modulus must be >= 3");
  const Int o = ord_r2(n);
  CommTriple c{n, {mod(e1, o), mod(e2, o), mod(e3, o)}};
  if (n % 4 == 0 && !(c.e[0] % 2 == c.e[1] % 2 && c.e[1] % 2 == c.e[2] % 2))
    throw std::invalid_argument("CommTriple: exponents must share parity when 4 | n");
  return c;
}

DihTriple CommTriple::to_triple() const {
  return {{DihElt::r(n, 2 * e[0]), DihElt::r(n, 2 * e[1]), DihElt::r(n, 2 * e[2])}};
}

std::string CommTriple::to_string() const {
  return "[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "]@" +
         std::to_string(n);
}

std::optional<CommTriple> comm_membership(const DihTriple& t) {
  const Int n = t.modulus();
  std::array<Int, 3> e{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& d = t.c[i];
    if (d.flip) return std::nullopt;
    if (n % 2 == 0) {
      if (d.rot % 2 != 0) return std::nullopt;
      e[i] = d.rot / 2;
    } else {
      e[i] = mod(d.rot * inverse_mod(2, n), n);
    }
  }
  if (n % 4 == 0 && !(e[0] % 2 == e[1] % 2 && e[1] % 2 == e[2] % 2)) return std::nullopt;
  return CommTriple{n, e};
}

namespace {

// [x^{2a}, y] -> (r^{4a}, 1, 1)
Word block_first(Int a) {
  if (a == 0) return {};
  return commutator(Word::x(checked_mul(2, a)), Word::y());
}

// [x, y^{-2b}] -> (1, r^{4b}, 1)
Word block_second(Int b) {
  if (b == 0) return {};
  return commutator(Word::x(), Word::y(checked_mul(-2, b)));
}

// [x,y]^{-2c} [x^{2c}, y] [x, y^{2c}] -> (1, 1, r^{4c})
Word block_third(Int c) {
  if (c == 0) return {};
  return power(commutator(Word::x(), Word::y()), checked_mul(-2, c)) * block_first(c) * block_second(-c);
}

}  // namespace

Word comm_word(const CommTriple& c) {
  const Int n = c.n;
  const Int o = ord_r2(n);
  if (n < 3) throw std::invalid_argument("comm_word: modulus must be >= 3");
  for (Int v : c.e)
    if (v < 0 || v >= o) throw std::invalid_argument("comm_word: exponents must be reduced mod ord(r^2)");
  if (n % 4 == 0 && !(c.e[0] % 2 == c.e[1] % 2 && c.e[1] % 2 == c.e[2] % 2))
    throw std::invalid_argument("comm_word: exponents must share parity when 4 | n");

  // Pick representatives sharing the parity of e1. When ord(r^2) is odd one
  // of e, e + ord(r^2) always has the wanted parity.
  const Int parity = c.e[0] % 2;
  std::array<Int, 3> rep = c.e;
  for (auto& v : rep)
    if (v % 2 != parity) v += o;

  Word out;
  if (parity == 1) {
    // [x, y] -> (r^2, r^-2, r^-2)
    out = commutator(Word::x(), Word::y());
    rep[0] -= 1;
    rep[1] += 1;
    rep[2] += 1;
  }

  // Each remaining exponent d is even; the blocks realize r^{4a} = r^{2d}, so
  // a is d/2 modulo ord(r^4).
  std::array<Int, 3> a{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (o % 2 == 0)
      a[i] = mod(rep[i] / 2, o / 2);
    else
      a[i] = mod(rep[i] * inverse_mod(2, o), o);
  }
  return out * block_first(a[0]) * block_second(a[1]) * block_third(a[2]);
}

// ---------------------------------------------------------------------------
// theta, tau on G_n

namespace {

template <class RotMap>
DihTriple induced(const DihTriple& t, RotMap&& rot_map, Word (*word_map)(const Word&), const char* what) {
  const auto dec = gn_decompose(t);
  if (!dec) throw NotMemberError(std::string(what) + ": element not in G_n: " + t.to_string());
  const Int n = t.modulus();
  const std::array<Int, 3> jr = rot_map(dec->j_rot);
  const DihTriple j{{DihElt::r(n, jr[0]), DihElt::r(n, jr[1]), DihElt::r(n, jr[2])}};
  return j * psi_eval(n, word_map(coset_word(dec->eps)));
}

}  // namespace

DihTriple gn_theta(const DihTriple& t) {
  return induced(
      t, [](const std::array<Int, 3>& a) { return std::array<Int, 3>{a[1], a[0], -a[2]}; }, &apply_theta,
      "gn_theta");
}

DihTriple gn_tau(const DihTriple& t) {
  return induced(
      t, [](const std::array<Int, 3>& a) { return std::array<Int, 3>{a[2], a[0], a[1]}; }, &apply_tau, "gn_tau");
}

// ---------------------------------------------------------------------------
// Permutations

Perm Perm::identity(Int n) {
  Perm p;
  p.img.resize(static_cast<std::size_t>(n));
  for (Int j = 0; j < n; ++j) p.img[static_cast<std::size_t>(j)] = j;
  return p;
}

Perm Perm::from_dihedral(const DihElt& d) {
  Perm p;
  p.img.resize(static_cast<std::size_t>(d.n));
  for (Int j = 0; j < d.n; ++j) p.img[static_cast<std::size_t>(j)] = mod(d.rot + (d.flip ? -j : j), d.n);
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(img.size());
  for (std::size_t j = 0; j < img.size(); ++j) p.img[static_cast<std::size_t>(img[j])] = static_cast<Int>(j);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.img.size() != b.img.size()) throw std::invalid_argument("Perm: degree mismatch");
  Perm p;
  p.img.resize(a.img.size());
  for (std::size_t j = 0; j < b.img.size(); ++j) p.img[j] = a.img[static_cast<std::size_t>(b.img[j])];
  return p;
}

LemmaWitness lemma_witness(Int m, const CommTriple& g) {
  const Int n = g.n;
  const Int u = checked_add(checked_mul(2, m), 1);
  if (gcd(mod(u, n), n) != 1) throw std::domain_error("lemma_witness: 2m+1 is not a unit mod n");

  Perm b;
  b.img.resize(static_cast<std::size_t>(n));
  for (Int j = 0; j < n; ++j) b.img[static_cast<std::size_t>(j)] = mod(mod(u, n) * j, n);

  const Int k = g.e[0];
  const Perm h1 = Perm::from_dihedral(DihElt::r(n, -2 * k - m)) * b;
  const Perm h2 = b;
  const Perm h3 = mod(m, 2) == 0 ? b : b * Perm::from_dihedral(DihElt::s(n));

  LemmaWitness w{{h1, h2, h3}, true, true};

  const DihTriple gt = g.to_triple();
  const DihTriple lhs_x = pow(xbar(n), u);
  const DihTriple lhs_y = gt.inverse() * pow(ybar(n), u) * gt;
  const DihTriple xb = xbar(n), yb = ybar(n);
  for (std::size_t i = 0; i < 3; ++i) {
    const Perm& h = w.h[i];
    const Perm hinv = h.inverse();
    if (Perm::from_dihedral(lhs_x.c[i]) != h * Perm::from_dihedral(xb.c[i]) * hinv) w.x_identity_holds = false;
    if (Perm::from_dihedral(lhs_y.c[i]) != h * Perm::from_dihedral(yb.c[i]) * hinv) w.y_identity_holds = false;
  }
  return w;
}

}  // namespace gtsh
