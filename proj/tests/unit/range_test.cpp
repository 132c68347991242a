#include <gtest/gtest.h>

#include "helpers.hpp"
#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/ilo.hpp"
#include "slocc/range.hpp"

using namespace slocc;
using slocc::test::S;

namespace {

/// Rank-one elements of span{X, Y}, 2x2, from det(sX + tY) as a binary quadratic.
std::string discriminant_oracle(const ExactMatrix& x, const ExactMatrix& y) {
  ExactScalar a = x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
  ExactScalar c = y(0, 0) * y(1, 1) - y(0, 1) * y(1, 0);
  ExactScalar b = x(0, 0) * y(1, 1) + x(1, 1) * y(0, 0) - x(0, 1) * y(1, 0) - x(1, 0) * y(0, 1);
  if (a.is_zero() && b.is_zero() && c.is_zero()) return "inf";
  return (b * b - ExactScalar(4) * a * c).is_zero() ? "1" : "2";
}

void expect_witnesses_valid(const MatrixSubspace& sub, const ProductCount& c) {
  for (const auto& w : c.witnesses) {
    if (w.exactness != Exactness::Exact) continue;
    EXPECT_EQ(rank(w.matrix()), 1u);
    EXPECT_EQ(sub.combination(w.coefficients), w.matrix());
  }
}

}  // namespace

TEST(Range, SubspaceValidation) {
  EXPECT_THROW(MatrixSubspace(2, 2, {ExactMatrix::identity(2), ExactMatrix::identity(2) * S("3")}), InvalidArgument);
  MatrixSubspace sub(2, 2, {ExactMatrix{{1, 0}, {0, 0}}, ExactMatrix{{0, 0}, {0, 1}}});
  EXPECT_TRUE(sub.coordinates(ExactMatrix::identity(2)));
  EXPECT_FALSE(sub.coordinates(ExactMatrix{{0, 1}, {0, 0}}));
}

TEST(Range, SmallExamples) {
  // span{I, diag(1,-1)} holds exactly the two diagonal units
  MatrixSubspace diag(2, 2, {ExactMatrix::identity(2), ExactMatrix{{1, 0}, {0, -1}}});
  ProductCount c = count_product_states(diag);
  EXPECT_EQ(c.str(), "2");
  expect_witnesses_valid(diag, c);
  // span{E00, E01} is all rank one
  EXPECT_EQ(count_product_states(MatrixSubspace(2, 2, {ExactMatrix{{1, 0}, {0, 0}}, ExactMatrix{{0, 1}, {0, 0}}})).str(),
            "inf");
  // identity alone
  EXPECT_EQ(count_product_states(MatrixSubspace(2, 2, {ExactMatrix::identity(2)})).str(), "0");
  // span{I, [[0,-1],[1,0]]}: det = s^2 + t^2, roots +-i
  ProductCount rot = count_product_states(MatrixSubspace(2, 2, {ExactMatrix::identity(2), ExactMatrix{{0, -1}, {1, 0}}}));
  EXPECT_EQ(rot.str(), "2");
  EXPECT_EQ(rot.exactness, Exactness::Exact);
}

TEST(Range, IrrationalWitnessesAreNumeric) {
  // det(sI + t[[0,2],[1,0]]) = s^2 - 2t^2
  ProductCount c = count_product_states(MatrixSubspace(2, 2, {ExactMatrix::identity(2), ExactMatrix{{0, 2}, {1, 0}}}));
  EXPECT_EQ(c.str(), "2");
  EXPECT_EQ(c.exactness, Exactness::Numeric);
}

TEST(Range, UnsupportedShapeIsExplicit) {
  std::mt19937_64 rng(11);
  std::vector<ExactMatrix> basis;
  while (basis.size() < 3) {
    basis.push_back(test::random_matrix(3, 3, rng));
    try {
      MatrixSubspace(3, 3, basis);
    } catch (const InvalidArgument&) {
      basis.pop_back();
    }
  }
  EXPECT_THROW(count_product_states(MatrixSubspace(3, 3, basis)), UnsupportedShape);
}

TEST(Range, DiscriminantOracleOnSampledGrid) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> v(-1, 1);
  int checked = 0;
  while (checked < 400) {
    ExactMatrix x(2, 2), y(2, 2);
    for (size_t i = 0; i < 4; ++i) x(i / 2, i % 2) = v(rng), y(i / 2, i % 2) = v(rng);
    if (rank(ExactMatrix::from_rows({x.data(), y.data()})) < 2) continue;
    ++checked;
    EXPECT_EQ(count_product_states(MatrixSubspace(2, 2, {x, y})).str(), discriminant_oracle(x, y))
        << x.str() << " " << y.str();
  }
}

TEST(Range, PencilAndTwoRowRoutesAgree) {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 150) {
    size_t cols = 2 + rng() % 3;
    ExactMatrix x = test::random_matrix(2, cols, rng), y = test::random_matrix(2, cols, rng);
    if (checked % 4 == 0) y = ExactMatrix(outer({1, test::small_scalar(rng)}, x.row(0)));
    if (checked % 4 == 1) x(1, 0) = 0, x(1, 1) = 0, y(0, 0) = 0;
    std::vector<ExactMatrix> basis{x, y};
    try {
      MatrixSubspace sub(2, cols, basis);
      ProductCount p = detail::count_by_pencil(sub), t = detail::count_by_two_rows(sub);
      EXPECT_TRUE(same_count(p, t)) << x.str() << " " << y.str() << " pencil " << p.str() << " two-row " << t.str();
      expect_witnesses_valid(sub, p);
      expect_witnesses_valid(sub, t);
      ++checked;
    } catch (const InvalidArgument&) {
    }
  }
}

TEST(Range, CanonicalSignatures) {
  const std::vector<std::pair<ClassLabel, std::string>> table = {
      {{Family::GHZ}, "[2,2,2]"},          {{Family::W}, "[1,1,1]"},
      {{Family::Psi1}, "[0,3,3]"},         {{Family::Psi2}, "[0,inf,inf]"},
      {{Family::Psi3}, "[1,inf,inf]"},     {{Family::Psi4}, "[0,1,1]"},
      {{Family::Psi5}, "[1,inf,inf]"},     {{Family::Psi6}, "[0,2,2]"},
      {{Family::Phi0Example}, "[1,inf,inf]"}, {{Family::Phi1Example}, "[1,inf,inf]"},
      {{Family::Upsilon0, 2}, "[0,0,inf]"}, {{Family::Upsilon1, 1}, "[1,1,inf]"},
      {{Family::Upsilon1, 3}, "[0,1,inf]"}, {{Family::Upsilon2, 2}, "[0,0,inf]"},
      {{Family::Theta0, 2}, "[0,2,inf]"},  {{Family::Theta1, 2}, "[0,inf,inf]"},
      {{Family::Theta1, 1}, "[1,inf,inf]"}, {{Family::Theta3, 3}, "[0,1,inf]"},
      {{Family::Upsilon0, 1}, "[inf,0,inf]"},
  };
  for (const auto& [label, bracket] : table) {
    PureState s = make_canonical(label);
    EXPECT_EQ(slocc_signature(s).str(), bracket) << label.str();
    EXPECT_EQ(slocc_signature(random_ilo(s.dims(), 21).apply(s)).str(), bracket) << label.str();
  }
}

TEST(Range, SignatureLiftsWitnessesToOriginalState) {
  PureState s = pad(make_canonical({Family::GHZ}), {3, 2, 4});
  SloccSignature sig = slocc_signature(s);
  EXPECT_EQ(sig.str(), "[2,2,2]");
  MatrixSubspace ab = range_subspace(s, Party::C);
  for (const auto& w : sig.counts[2].witnesses) EXPECT_EQ(ab.combination(w.coefficients), w.matrix());
}

TEST(Range, PartnerRanks) {
  EXPECT_EQ(partner_multiset(make_canonical({Family::Psi3}), Party::A),
            (std::vector<std::pair<size_t, size_t>>{{1, 1}}));
  EXPECT_EQ(partner_multiset(make_canonical({Family::Psi5}), Party::A),
            (std::vector<std::pair<size_t, size_t>>{{2, 2}}));
  EXPECT_EQ(partner_multiset(make_canonical({Family::GHZ}), Party::C),
            (std::vector<std::pair<size_t, size_t>>{{1, 1}, {1, 1}}));
  EXPECT_EQ(partner_multiset(make_canonical({Family::Theta2, 2}), Party::B),
            (std::vector<std::pair<size_t, size_t>>{{4, 1}}));
  EXPECT_EQ(partner_multiset(make_canonical({Family::Theta3, 2}), Party::B),
            (std::vector<std::pair<size_t, size_t>>{{4, 2}}));
}
