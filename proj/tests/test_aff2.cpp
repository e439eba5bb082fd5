#include <gtest/gtest.h>

#include <set>

#include "gtsh/aff2.hpp"
#include "gtsh/poset.hpp"
#include "oracles.hpp"

using namespace gtsh;

namespace {
AffTrunc at(Int alpha, Int k, Int u) { return AffTrunc::make(alpha, k, u); }
}  // namespace

TEST(Aff2, Arithmetic) {
  EXPECT_EQ(aff_mul(at(3, 1, 5), at(3, 1, 5)), at(3, 2, 9));
  EXPECT_EQ(project(at(3, 1, 5), 2), at(2, 1, 5));
  EXPECT_THROW(project(at(2, 1, 5), 3), std::invalid_argument);
  EXPECT_THROW(at(3, 0, 4), std::invalid_argument);
  EXPECT_THROW(at(1, 0, 1), std::invalid_argument);
  for (Int alpha : {2, 3, 4})
    for (const auto& a : f_elements(alpha)) {
      EXPECT_EQ(aff_mul(a, aff_inv(a)), AffTrunc::identity(alpha));
      EXPECT_EQ(aff_mul(aff_inv(a), a), AffTrunc::identity(alpha));
    }
}

TEST(Aff2, UnitDecompose) {
  const auto check = [](Int u, Int alpha, Int a, Int b) {
    const auto d = unit_decompose(u, alpha);
    EXPECT_EQ(d.a, a) << u;
    EXPECT_EQ(d.b, b) << u;
  };
  check(7, 2, 1, 0);
  check(3, 2, 1, 1);
  check(9, 3, 0, 2);
  for (Int alpha = 2; alpha <= 9; ++alpha)
    for (Int u = 1; u < (Int{1} << (alpha + 1)); u += 2) {
      const auto [a, b] = oracle::unit_log(u, alpha);
      const auto d = unit_decompose(u, alpha);
      ASSERT_EQ(d.a, a);
      ASSERT_EQ(d.b, b);
    }
  EXPECT_THROW(unit_decompose(4, 3), std::invalid_argument);
}

TEST(Aff2, PsiMap) {
  EXPECT_EQ(psi_map(at(2, 0, -1)), 0);
  EXPECT_EQ(psi_map(at(2, 1, 5)), 0);
  EXPECT_EQ(psi_map(at(2, 1, 1)), 1);
  for (Int alpha = 2; alpha <= 6; ++alpha) {
    const auto all = f_elements(alpha);
    for (std::size_t i = 0; i < all.size(); i += 5)
      for (std::size_t j = 0; j < all.size(); j += 3)
        EXPECT_EQ(psi_map(aff_mul(all[i], all[j])), (psi_map(all[i]) + psi_map(all[j])) % 2);
  }
}

TEST(Aff2, FtildeMembership) {
  EXPECT_TRUE(ftilde_membership(at(3, 1, 5)));
  EXPECT_FALSE(ftilde_membership(at(3, 1, 9)));
  EXPECT_TRUE(ftilde_membership(at(2, 0, 7)));
}

TEST(Aff2, GeneratorClosure) {
  const std::vector<AffTrunc> a2{at(2, 0, 1), at(2, 0, 7), at(2, 1, 3), at(2, 1, 5)};
  EXPECT_EQ(generator_closure(2), a2);
  EXPECT_EQ(generator_closure(3).size(), 16u);
  EXPECT_EQ(generator_closure(4).size(), 64u);
  for (Int alpha = 2; alpha <= 8; ++alpha) {
    std::vector<AffTrunc> kernel;
    for (const auto& a : f_elements(alpha))
      if (psi_map(a) == 0) kernel.push_back(a);
    EXPECT_EQ(generator_closure(alpha), kernel);
    EXPECT_EQ(kernel.size(), std::size_t{1} << (2 * alpha - 2));
  }
  EXPECT_THROW(generator_closure(11), std::out_of_range);
}

TEST(Aff2, ShadowCorrespondence) {
  EXPECT_EQ(shadow_to_trunc(Shadow::identity(4)), at(2, 0, 1));
  EXPECT_EQ(shadow_to_trunc(Shadow::make(4, 3, 0)), at(2, 0, 7));
  EXPECT_EQ(shadow_to_trunc(Shadow::make(8, 1, 1)), at(3, 1, 3));
  EXPECT_THROW(shadow_to_trunc(Shadow::identity(12)), std::invalid_argument);
  for (Int alpha = 2; alpha <= 5; ++alpha) {
    const Int n = Int{1} << alpha;
    std::set<AffTrunc> image;
    for (const auto& s : enumerate_closed(n)) {
      const AffTrunc t = shadow_to_trunc(s);
      image.insert(t);
      EXPECT_EQ(trunc_to_shadow(t), s);
      if (alpha > 2) EXPECT_EQ(project(t, alpha - 1), shadow_to_trunc(reduce_shadow(s, n / 2)));
    }
    const auto closure = generator_closure(alpha);
    EXPECT_EQ(image, std::set<AffTrunc>(closure.begin(), closure.end()));
  }
}

TEST(Aff2, Towers) {
  std::vector<std::pair<Int, Int>> ids(6, {0, 1});
  EXPECT_TRUE(tower_check(tower_build(ids)).valid);
  const Tower t = tower_from_element(1, 5, 12);
  EXPECT_EQ(t.top(), 12);
  EXPECT_TRUE(tower_check(t).valid);
  const auto bad = tower_check(tower_build({{0, 5}, {1, 5}}));
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.failing_level, 3);
}
