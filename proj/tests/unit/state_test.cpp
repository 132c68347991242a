#include <gtest/gtest.h>

#include "helpers.hpp"
#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/ilo.hpp"
#include "slocc/state.hpp"

using namespace slocc;
using slocc::test::S;

namespace {
PureState ghz() { return PureState::from_terms({2, 2, 2}, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}}); }
PureState w() { return PureState::from_terms({2, 2, 2}, {{{0, 0, 1}, 1}, {{0, 1, 0}, 1}, {{1, 0, 0}, 1}}); }
}  // namespace

TEST(PureState, Validation) {
  EXPECT_THROW(PureState({2, 0, 2}, {}), InvalidArgument);
  EXPECT_THROW(PureState::from_terms({2, 2, 2}, {{{0, 0, 2}, 1}}), InvalidArgument);
  EXPECT_THROW(PureState::from_terms({2, 2, 2}, {}), InvalidArgument);
}

TEST(PureState, EqualityIsUpToScalar) {
  PureState a = ghz();
  PureState b = PureState::from_terms({2, 2, 2}, {{{0, 0, 0}, S("2i")}, {{1, 1, 1}, S("2i")}});
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.exactly_equal(b));
  EXPECT_NE(a, w());
}

TEST(PureState, UnfoldingAndSlices) {
  PureState s = PureState::from_terms({2, 3, 2}, {{{1, 2, 0}, 5}});
  ExactMatrix ua = s.unfolding(Party::A);
  EXPECT_EQ(ua.rows(), 2u);
  EXPECT_EQ(ua.cols(), 6u);
  EXPECT_EQ(ua(1, 2 * 2 + 0), ExactScalar(5));
  ExactMatrix sl = s.slice(Party::B, 2);  // over A, C
  EXPECT_EQ(sl(1, 0), ExactScalar(5));
}

TEST(PureState, LocalRanks) {
  EXPECT_EQ(local_ranks(ghz()).str(), "(2,2,2)");
  EXPECT_EQ(local_ranks(w()).str(), "(2,2,2)");
  EXPECT_EQ(local_ranks(PureState::from_terms({2, 2, 2}, {{{0, 0, 0}, 1}})).str(), "(1,1,1)");
  EXPECT_EQ(local_ranks(make_canonical({Family::Upsilon0, 2})).str(), "(2,2,4)");
  EXPECT_EQ(local_ranks(make_canonical({Family::Theta0, 2})).str(), "(2,4,6)");
}

TEST(PureState, ReducedDensityRankMatchesLocalRank) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    PureState s = random_ilo({2, 3, 3}, k).apply(make_canonical({Family::Psi4}));
    LocalRankProfile r = local_ranks(s);
    EXPECT_EQ(rank(reduced_density(s, {Party::A})), r.r_a);
    EXPECT_EQ(rank(reduced_density(s, {Party::B})), r.r_b);
    EXPECT_EQ(rank(reduced_density(s, {Party::A, Party::B})), r.r_c);
  }
}

TEST(PureState, AdjointFormReassembles) {
  for (const ClassLabel& l : {ClassLabel(Family::W), ClassLabel(Family::Psi1), ClassLabel(Family::Theta3, 2)}) {
    PureState s = random_ilo(make_canonical(l).dims(), 3).apply(make_canonical(l));
    for (Party p : {Party::A, Party::B, Party::C}) {
      AdjointForm f = adjoint_form(s, p);
      EXPECT_EQ(f.adjoint_states.size(), local_ranks(s)[p]);
      EXPECT_TRUE(f.reassemble(s.dims()).exactly_equal(s));
    }
  }
}

TEST(PureState, ApplyLocalMatchesTensorFormula) {
  std::mt19937_64 rng(10);
  PureState s = make_canonical({Family::Psi2});
  ExactMatrix m = test::random_matrix(3, 3, rng);
  if (determinant(m).is_zero()) m = ExactMatrix::identity(3);
  PureState t = apply_local(s, Party::B, m);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k) {
        ExactScalar want;
        for (size_t jj = 0; jj < 3; ++jj) want.add_product(m(j, jj), s.amplitude({i, jj, k}));
        EXPECT_EQ(t.amplitude({i, j, k}), want);
      }
}

TEST(PureState, PermuteAndCompress) {
  PureState s = PureState::from_terms({2, 3, 4}, {{{0, 1, 3}, 2}, {{1, 2, 0}, S("i")}});
  PureState p = permute_parties(s, {Party::C, Party::A, Party::B});
  EXPECT_EQ(p.dims(), (Dims{4, 2, 3}));
  EXPECT_EQ(p.amplitude({3, 0, 1}), ExactScalar(2));
  EXPECT_TRUE(permute_parties(p, {Party::B, Party::C, Party::A}).exactly_equal(s));

  PureState padded = PureState::from_terms({3, 4, 5}, {{{0, 1, 0}, 1}, {{2, 3, 4}, 1}, {{0, 3, 4}, 1}});
  Compression c = compress(padded);
  EXPECT_EQ(c.state.dims(), local_ranks(padded).as_array());
  LocalOperatorTriple g(c.basis_change[0], c.basis_change[1], c.basis_change[2]);
  EXPECT_TRUE(pad(c.state, padded.dims()).exactly_equal(g.apply(padded)));
  EXPECT_THROW(pad(padded, {2, 4, 5}), InvalidArgument);
}
