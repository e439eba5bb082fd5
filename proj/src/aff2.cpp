#include "gtsh/aff2.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gtsh {

namespace {

void check_level(Int alpha) {
  if (alpha < 2 || alpha > kMaxAffLevel)
    throw std::invalid_argument("aff2: level must be in [2, " + std::to_string(kMaxAffLevel) + "]");
}

// Discrete-log table for (Z/2^{alpha+1})^x, indexed by the residue.
class UnitLogTable {
 public:
  explicit UnitLogTable(Int alpha) : modulus_(Int{1} << (alpha + 1)), entries_(static_cast<std::size_t>(modulus_)) {
    const Int order5 = Int{1} << (alpha - 1);
    Int p = 1;
    for (Int b = 0; b < order5; ++b) {
      entries_[static_cast<std::size_t>(p)] = {0, b};
      entries_[static_cast<std::size_t>(modulus_ - p)] = {1, b};
      p = p * 5 % modulus_;
    }
  }

  UnitLog lookup(Int u) const { return entries_[static_cast<std::size_t>(mod(u, modulus_))]; }

 private:
  Int modulus_;
  std::vector<UnitLog> entries_;
};

const UnitLogTable& table_for(Int alpha) {
  static std::mutex mu;
  static std::array<std::unique_ptr<UnitLogTable>, kMaxAffLevel + 1> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[static_cast<std::size_t>(alpha)];
  if (!slot) slot = std::make_unique<UnitLogTable>(alpha);
  return *slot;
}

}  // namespace

AffTrunc AffTrunc::make(Int alpha, Int k, Int u) {
  check_level(alpha);
  AffTrunc a{alpha, 0, 0};
  a.k = mod(k, a.k_modulus());
  a.u = mod(u, a.u_modulus());
  if (a.u % 2 == 0) throw std::invalid_argument("AffTrunc: u must be odd");
  return a;
}

AffTrunc aff_mul(const AffTrunc& a, const AffTrunc& b) {
  if (a.alpha != b.alpha) throw std::invalid_argument("aff_mul: level mismatch");
  const Int km = a.k_modulus();
  return {a.alpha, mod(a.k + mod(a.u, km) * b.k, km), mod(a.u * b.u, a.u_modulus())};
}

AffTrunc aff_inv(const AffTrunc& a) {
  const Int u_inv = inverse_mod(a.u, a.u_modulus());
  const Int km = a.k_modulus();
  return {a.alpha, mod(-mod(u_inv, km) * a.k, km), u_inv};
}

AffTrunc project(const AffTrunc& a, Int level) {
  check_level(level);
  if (level > a.alpha) throw std::invalid_argument("project: target level above source level");
  return AffTrunc::make(level, a.k, a.u);
}

UnitLog unit_decompose(Int u, Int alpha) {
  check_level(alpha);
  if (mod(u, 2) == 0) throw std::invalid_argument("unit_decompose: u must be odd");
  return table_for(alpha).lookup(u);
}

int psi_map(const AffTrunc& a) {
  const AffTrunc low = project(a, 2);
  return static_cast<int>(mod(low.k + unit_decompose(low.u, 2).b, 2));
}

bool ftilde_membership(const AffTrunc& a) { return mod(a.k, 2) == mod(unit_decompose(a.u, a.alpha).b, 2); }

std::vector<AffTrunc> f_elements(Int alpha) {
  check_level(alpha);
  std::vector<AffTrunc> out;
  const AffTrunc probe{alpha, 0, 1};
  for (Int k = 0; k < probe.k_modulus(); ++k)
    for (Int u = 1; u < probe.u_modulus(); u += 2) out.push_back({alpha, k, u});
  return out;
}

std::vector<AffTrunc> generator_closure(Int alpha, Int bound) {
  check_level(alpha);
  if (alpha > bound)
    throw std::out_of_range("generator_closure: level " + std::to_string(alpha) + " exceeds bound " +
                            std::to_string(bound));
  const std::array<AffTrunc, 3> gens{AffTrunc::make(alpha, 2, 1), AffTrunc::make(alpha, 1, 5),
                                     AffTrunc::make(alpha, 0, -1)};
  const Int um = gens[0].u_modulus();
  auto index = [um](const AffTrunc& a) { return static_cast<std::size_t>(a.k * um + a.u); };

  std::vector<char> seen(static_cast<std::size_t>(gens[0].k_modulus() * um), 0);
  std::vector<AffTrunc> out;
  std::deque<AffTrunc> queue;
  const AffTrunc e = AffTrunc::identity(alpha);
  seen[index(e)] = 1;
  out.push_back(e);
  queue.push_back(e);
  while (!queue.empty()) {
    const AffTrunc cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const AffTrunc next = aff_mul(cur, g);
      if (seen[index(next)]) continue;
      seen[index(next)] = 1;
      out.push_back(next);
      queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffTrunc shadow_to_trunc(const Shadow& s) {
  const auto [alpha, odd] = split_two_adic(s.n);
  if (odd != 1 || alpha < 2) throw std::invalid_argument("shadow_to_trunc: target must be 2^alpha with alpha >= 2");
  return AffTrunc::make(alpha, s.k, 2 * s.m + 1);
}

Shadow trunc_to_shadow(const AffTrunc& a) { return Shadow::make(Int{1} << a.alpha, (a.u - 1) / 2, a.k); }

Tower tower_build(const std::vector<std::pair<Int, Int>>& per_level) {
  Tower t;
  Int alpha = 2;
  for (const auto& [k, u] : per_level) t.levels.push_back(AffTrunc::make(alpha++, k, u));
  return t;
}

Tower tower_from_element(Int k, Int u, Int top) {
  check_level(top);
  Tower t;
  for (Int alpha = 2; alpha <= top; ++alpha) t.levels.push_back(AffTrunc::make(alpha, k, u));
  return t;
}

TowerCheck tower_check(const Tower& t) {
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    const Int expected = static_cast<Int>(i) + 2;
    if (t.levels[i].alpha != expected) return {false, expected};
    if (i > 0 && project(t.levels[i], expected - 1) != t.levels[i - 1]) return {false, expected};
  }
  return {true, std::nullopt};
}

}  // namespace gtsh
