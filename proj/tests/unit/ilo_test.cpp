#include <gtest/gtest.h>

#include "helpers.hpp"
#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/ilo.hpp"

using namespace slocc;
using slocc::test::S;

TEST(Ilo, TripleValidation) {
  EXPECT_THROW(LocalOperatorTriple(ExactMatrix(2, 2), ExactMatrix::identity(2), ExactMatrix::identity(2)),
               InvalidArgument);
  EXPECT_THROW(LocalOperatorTriple(ExactMatrix(2, 3), ExactMatrix::identity(2), ExactMatrix::identity(2)),
               InvalidArgument);
  EXPECT_TRUE(LocalOperatorTriple::identity({2, 3, 4}).is_identity());
}

TEST(Ilo, ComposeAndInverse) {
  Dims d{2, 3, 3};
  PureState s = make_canonical({Family::Psi1});
  for (uint64_t seed = 0; seed < 10; ++seed) {
    LocalOperatorTriple g = random_ilo(d, seed), h = random_ilo(d, seed + 100);
    EXPECT_TRUE(g.inverse().apply(g.apply(s)).exactly_equal(s));
    EXPECT_TRUE(compose(g, h).apply(s).exactly_equal(g.apply(h.apply(s))));
  }
}

TEST(Ilo, RandomIsSeededAndInvertible) {
  EXPECT_EQ(random_ilo({2, 2, 3}, 5), random_ilo({2, 2, 3}, 5));
  EXPECT_FALSE(random_ilo({2, 2, 3}, 5) == random_ilo({2, 2, 3}, 6));
  for (uint64_t seed = 0; seed < 30; ++seed) EXPECT_FALSE(determinant(random_invertible(4, seed)).is_zero());
}

TEST(Ilo, ElementaryGenerators) {
  Dims d{2, 2, 2};
  PureState ghz = make_canonical({Family::GHZ});
  PureState swapped = basis_swap(d, Party::A, 0, 1).apply(ghz);
  EXPECT_EQ(swapped.amplitude({1, 0, 0}), ExactScalar(1));
  PureState scaled = elementary_scale(d, Party::C, 1, S("i")).apply(ghz);
  EXPECT_EQ(scaled.amplitude({1, 1, 1}), S("i"));
  PureState added = elementary_add(d, Party::B, 0, 1, S("2")).apply(ghz);
  EXPECT_EQ(added.amplitude({0, 1, 0}), S("2"));
  EXPECT_THROW(elementary_scale(d, Party::A, 0, 0), InvalidArgument);
}

TEST(Ilo, ElementaryFactorisationReproducesMatrix) {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    size_t n = 1 + seed % 5;
    ExactMatrix v = random_invertible(n, seed);
    IloWord word = elementary_factors(v, Party::B);
    Dims d{1, n, 1};
    EXPECT_EQ(word_to_triple(d, word).op(Party::B), v) << seed;
    for (const auto& op : word) EXPECT_EQ(op.party, Party::B);
  }
  LocalOperatorTriple g = random_ilo({2, 3, 4}, 9);
  PureState s = make_canonical({Family::Upsilon1, 1});
  PureState big = pad(s, {2, 3, 4});
  EXPECT_TRUE(apply_word(big, elementary_factors(g)).exactly_equal(g.apply(big)));
}
