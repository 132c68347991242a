#include <gtest/gtest.h>

#include "helpers.hpp"
#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/pencil.hpp"

using namespace slocc;
using slocc::test::S;

namespace {

/// s_k = d_k / d_{k-1}, d_k the monic gcd of all k x k minors.
std::vector<UniPoly> factors_from_minors(const Pencil& p) {
  std::vector<UniPoly> out;
  UniPoly prev = UniPoly::constant(1);
  for (size_t k = 1; k <= std::min(p.rows(), p.cols()); ++k) {
    std::vector<UniPoly> minors = minor_polynomials(p, k);
    UniPoly g;
    for (const auto& m : minors)
      if (!m.is_zero()) g = g.is_zero() ? m.monic() : poly_gcd(g, m);
    if (g.is_zero()) break;
    out.push_back(exact_div(g, prev));
    prev = g;
  }
  return out;
}

Pencil bc_pencil(const PureState& s) { return Pencil(s.slice(Party::A, 0), s.slice(Party::A, 1)); }

}  // namespace

TEST(Pencil, KnownRankProfiles) {
  // [1 t]: minimal index only, no exceptional point
  Pencil l1(ExactMatrix{{1, 0}}, ExactMatrix{{0, 1}});
  EXPECT_EQ(pencil_rank_profile(l1).str(), "generic 1; exceptional {}");
  EXPECT_EQ(pencil_kernel_degrees(l1).str(), "column {1}; row {}");
  EXPECT_EQ(pencil_kernel_degrees(l1.transpose()).str(), "column {}; row {1}");

  // Jordan block at 0
  Pencil j2(ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix::identity(2));
  EXPECT_EQ(pencil_rank_profile(j2).str(), "generic 2; exceptional {1}");

  // diag(t, t - 1)
  Pencil d(ExactMatrix{{0, 0}, {0, -1}}, ExactMatrix::identity(2));
  PencilRankProfile pd = pencil_rank_profile(d, true);
  EXPECT_EQ(pd.str(), "generic 2; exceptional {1,1}");
  ASSERT_EQ(pd.points.size(), 2u);
  std::vector<std::string> at;
  for (const auto& pt : pd.points) at.push_back(pt.location->str());
  std::sort(at.begin(), at.end());
  EXPECT_EQ(at, (std::vector<std::string>{"0", "1"}));

  // diag(1 + t, 1): one finite point and infinity
  Pencil inf(ExactMatrix::identity(2), ExactMatrix{{1, 0}, {0, 0}});
  PencilRankProfile pi = pencil_rank_profile(inf, true);
  EXPECT_EQ(pi.str(), "generic 2; exceptional {1,1}");
  bool saw_infinity = false;
  for (const auto& pt : pi.points) saw_infinity |= pt.kind == ExceptionalPoint::Kind::Infinity;
  EXPECT_TRUE(saw_infinity);
}

TEST(Pencil, IrrationalPointsAreGroupedExactly) {
  // diag(t^2 - 2) companion: two algebraic points of rank 1
  Pencil p(ExactMatrix{{0, -2}, {1, 0}}, ExactMatrix{{-1, 0}, {0, -1}});
  PencilRankProfile prof = pencil_rank_profile(p, true);
  EXPECT_EQ(prof.str(), "generic 2; exceptional {1,1}");
  EXPECT_TRUE(prof.has_algebraic_points);
}

TEST(Pencil, CanonicalStateProfiles) {
  EXPECT_EQ(pencil_rank_profile(bc_pencil(make_canonical({Family::GHZ}))).str(), "generic 2; exceptional {1,1}");
  EXPECT_EQ(pencil_rank_profile(bc_pencil(make_canonical({Family::W}))).str(), "generic 2; exceptional {1}");
  EXPECT_EQ(pencil_rank_profile(bc_pencil(make_canonical({Family::Phi0Example}))).str(),
            "generic 4; exceptional {1,3}");
  EXPECT_EQ(pencil_rank_profile(bc_pencil(make_canonical({Family::Phi1Example}))).str(),
            "generic 4; exceptional {1}");
  EXPECT_EQ(pencil_kernel_degrees(bc_pencil(make_canonical({Family::Theta4, 2}))).str(), "column {2,2}; row {}");
  EXPECT_EQ(pencil_kernel_degrees(bc_pencil(make_canonical({Family::Theta5, 2}))).str(), "column {1,3}; row {}");
}

TEST(Pencil, SmithFormAgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    ExactMatrix a = test::random_matrix(r, c, rng), b = test::random_matrix(r, c, rng);
    if (trial % 3 == 0) {
      // force structure: shared low-rank part and a repeated eigenvalue
      ExactMatrix u = test::random_matrix(r, 1, rng), v = test::random_matrix(1, c, rng);
      b = u * v;
      a = a * S("0") + u * test::random_matrix(1, c, rng);
      if (trial % 2) a(0, 0) += 1;
    }
    if (a.is_zero() && b.is_zero()) continue;
    Pencil p(a, b);
    std::vector<UniPoly> snf = invariant_factors(p), det = factors_from_minors(p);
    ASSERT_EQ(snf.size(), det.size()) << "A=" << a.str() << " B=" << b.str();
    for (size_t k = 0; k < snf.size(); ++k) EXPECT_EQ(snf[k].monic(), det[k].monic()) << k;
  }
}

TEST(Pencil, ProfileInvariantUnderEquivalenceAndReparametrisation) {
  std::mt19937_64 rng(8);
  std::vector<Pencil> samples = {bc_pencil(make_canonical({Family::Phi0Example})),
                                 bc_pencil(make_canonical({Family::Theta3, 2})),
                                 bc_pencil(make_canonical({Family::Psi3}))};
  for (const Pencil& p : samples) {
    PencilRankProfile base = pencil_rank_profile(p);
    KernelDegrees kd = pencil_kernel_degrees(p);
    for (int k = 0; k < 5; ++k) {
      ExactMatrix l = test::random_matrix(p.rows(), p.rows(), rng), r = test::random_matrix(p.cols(), p.cols(), rng);
      ExactMatrix h = test::random_matrix(2, 2, rng);
      if (determinant(l).is_zero() || determinant(r).is_zero() || determinant(h).is_zero()) continue;
      Pencil q(l * ExactMatrix(p.a() * h(0, 0) + p.b() * h(0, 1)) * r, l * ExactMatrix(p.a() * h(1, 0) + p.b() * h(1, 1)) * r);
      EXPECT_EQ(pencil_rank_profile(q), base);
      EXPECT_EQ(pencil_kernel_degrees(q), kd);
    }
  }
}

TEST(Pencil, RejectsBadInput) {
  EXPECT_THROW(Pencil(ExactMatrix(2, 2), ExactMatrix(2, 3)), InvalidArgument);
  EXPECT_THROW(minor_polynomials(Pencil(ExactMatrix::identity(2), ExactMatrix::identity(2)), 0), InvalidArgument);
  EXPECT_THROW(pencil_rank_profile(Pencil(ExactMatrix(2, 2), ExactMatrix(2, 2))), InvalidArgument);
}
