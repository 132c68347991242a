#include <gtest/gtest.h>

#include "slocc/error.hpp"
#include "slocc/verify.hpp"

using namespace slocc;

TEST(Appendix, DiagonalVaForcesZeroRows) {
  for (size_t m : {2, 3}) {
    AppendixDraw d = appendix_draw(m, ExactMatrix::identity(2));
    EXPECT_TRUE(d.literal_forced);
    EXPECT_TRUE(d.direct_forced);
    EXPECT_FALSE(d.counterexample);
    for (size_t r : {m, m + 1})
      for (size_t i = 0; i <= m; ++i)
        EXPECT_NE(std::find(d.literal_zeros.begin(), d.literal_zeros.end(), std::make_pair(r, i)), d.literal_zeros.end())
            << "a_" << r << "," << i;
  }
}

TEST(Appendix, RandomDrawsForcedSingular) {
  for (size_t m : {2, 3, 4}) {
    AppendixReport r = verify_appendix_theta45(m, 5, 1);
    EXPECT_TRUE(r.all_forced()) << m;
    ASSERT_EQ(r.cases.size(), 3u);
  }
  EXPECT_THROW(verify_appendix_theta45(1, 5, 1), InvalidArgument);
  EXPECT_THROW(appendix_draw(2, ExactMatrix{{1, 1}, {1, 1}}), InvalidArgument);
}

TEST(VerifyTheorem, RangeChecks) {
  EXPECT_THROW(verify_theorem("3", 5, 1, 0), InvalidArgument);
  EXPECT_THROW(verify_theorem("4", 1, 1, 0), InvalidArgument);
  EXPECT_THROW(verify_theorem("7", std::nullopt, 1, 0), InvalidArgument);
  EXPECT_TRUE(verify_theorem("3", 2, 1, 0).passed());
  EXPECT_TRUE(verify_theorem("upsilon0", 2, 5, 0).passed());
}

TEST(VerifyTheorem, SeparatingInvariants) {
  auto d = separating_invariants(make_canonical({Family::Theta4, 2}), make_canonical({Family::Theta5, 2}));
  EXPECT_EQ(d, (std::vector<std::string>{"pencil kernel degrees"}));
  d = separating_invariants(make_canonical({Family::GHZ}), make_canonical({Family::Psi1}));
  EXPECT_EQ(d, (std::vector<std::string>{"local ranks"}));
}

TEST(RandomStates, FullRank) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(local_ranks(random_full_rank_grid({2, 2, 3}, seed)).as_array(), (Dims{2, 2, 3}));
    EXPECT_EQ(local_ranks(random_full_rank({2, 3, 6}, seed)).as_array(), (Dims{2, 3, 6}));
  }
}
