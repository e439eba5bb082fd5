#include <gtest/gtest.h>

#include "gtsh/lochak_schneps.hpp"

using namespace gtsh;

TEST(LochakSchneps, Examples) {
  const auto id = ls_witness(Shadow::identity(6));
  EXPECT_TRUE(id.g.empty());
  EXPECT_TRUE(id.h.empty());
  EXPECT_EQ(id.which, LsCase::TrivialCoset);

  const auto w21 = ls_witness(Shadow::make(6, 2, 1));
  EXPECT_EQ(w21.h, Word::x() * Word::z(-4));
  EXPECT_EQ(w21.which, LsCase::XyCoset);

  const auto w50 = ls_witness(Shadow::make(6, 5, 0));
  EXPECT_EQ(w50.h, Word::z(-5));
  EXPECT_EQ(w50.which, LsCase::XyCoset);
  EXPECT_STREQ(ls_case_name(w50.which), "xy-coset");
}

TEST(LochakSchneps, WrongWitnessRejected) {
  EXPECT_FALSE(ls_verify(Shadow::identity(6), Word::x(), Word()));
  EXPECT_FALSE(ls_verify(Shadow::identity(6), Word(), Word::x()));
}

TEST(LochakSchneps, ConstructedWitnessesVerify) {
  for (Int n : {3, 6, 12, 15, 18, 24, 30})
    for (const auto& s : enumerate_closed(n)) {
      if (mod(s.m, 3) == 1) continue;
      const auto w = ls_witness(s);
      EXPECT_TRUE(ls_verify(s, w.g, w.h)) << n << " " << s.label();
    }
}

TEST(LochakSchneps, BruteForce) {
  for (const auto& s : enumerate_closed(6)) EXPECT_TRUE(ls_exists_brute(6, s.m, s.g())) << s.label();
  EXPECT_FALSE(ls_exists_brute(6, 0, CommTriple::make(6, 1, 1, 0)));
  EXPECT_TRUE(ls_exists_brute(6, 0, CommTriple::make(6, 0, 0, 0)));
  EXPECT_THROW(ls_witness(Shadow::identity(4)), std::invalid_argument);
}
