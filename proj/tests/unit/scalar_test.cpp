#include <gtest/gtest.h>

#include "helpers.hpp"
#include "slocc/error.hpp"

using namespace slocc;
using slocc::test::S;

TEST(Rational, ParsesLowestTermsOnly) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_THROW(parse_rational("2/4"), ParseError);
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1e3"), ParseError);
  EXPECT_EQ(parse_rational("2/4", false), Rational(1, 2));
}

TEST(Rational, FormatsCanonically) {
  EXPECT_EQ(format_rational(Rational(-6, 8)), "-3/4");
  EXPECT_EQ(format_rational(Rational(5)), "5");
}

TEST(ExactScalar, ParsesGaussianForms) {
  EXPECT_EQ(S("i"), ExactScalar::imag_unit());
  EXPECT_EQ(S("-i"), ExactScalar(0, -1));
  EXPECT_EQ(S("2i"), ExactScalar(0, 2));
  EXPECT_EQ(S("1/2-3/4i"), ExactScalar(Rational(1, 2), Rational(-3, 4)));
  EXPECT_EQ(S("-1+i"), ExactScalar(-1, 1));
  EXPECT_EQ(S("-5/3"), ExactScalar(Rational(-5, 3)));
  EXPECT_THROW(S(""), ParseError);
  EXPECT_THROW(S("1+2"), ParseError);
}

TEST(ExactScalar, Arithmetic) {
  EXPECT_EQ(S("1+2i") * S("3-i"), S("5+5i"));
  EXPECT_EQ(S("1+i").inverse(), S("1/2-1/2i"));
  EXPECT_EQ(S("5+5i") / S("3-i"), S("1+2i"));
  EXPECT_EQ(S("3+4i").norm(), Rational(25));
  EXPECT_EQ(S("3+4i").conj(), S("3-4i"));
  EXPECT_THROW(ExactScalar(0).inverse(), MathError);
  ExactScalar acc(1);
  acc.add_product(S("i"), S("i"));
  EXPECT_TRUE(acc.is_zero());
  acc.sub_product(S("2"), S("1/2"));
  EXPECT_EQ(acc, ExactScalar(-1));
}

TEST(ExactScalar, StrRoundTrips) {
  EXPECT_EQ(S("1/2-3/4i").str(), "1/2-3/4i");
  EXPECT_EQ(S("-i").str(), "-1i");
  EXPECT_EQ(ExactScalar(7).str(), "7");
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    ExactScalar x(Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1),
                  Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1));
    EXPECT_EQ(ExactScalar::parse(x.str()), x) << x.str();
  }
}

TEST(ExactScalar, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 300; ++k) {
    ExactScalar a = test::small_scalar(rng), b = test::small_scalar(rng), c = test::small_scalar(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}
