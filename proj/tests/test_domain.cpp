#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace splittori;

namespace {

Point P(const char* x, const char* y) { return {parse_scalar(x), parse_scalar(y)}; }

}  // namespace

TEST(Domain, RValue) {
  EXPECT_EQ(r_value(P("0", "0")), Scalar(0));
  // the sketched point of the first figure, drawn at scale 5
  EXPECT_EQ(r_value(P("6/5", "4/5")), Scalar::ratio(4, 5));
  EXPECT_EQ(r_value(P("2", "1/3")), Scalar(1));
  EXPECT_EQ(r_value(P("1/4", "1/2")), Scalar::ratio(1, 2));
}

TEST(Domain, ParsePoint) {
  Point p = parse_point("( 1/4 , 1/2+1*sqrt(2) )");
  EXPECT_EQ(p.x, Scalar::ratio(1, 4));
  EXPECT_EQ(p.y, parse_scalar("1/2+1*sqrt(2)"));
  EXPECT_THROW(parse_point("(1,2"), ParseError);
  EXPECT_THROW(parse_point("1,2"), ParseError);
  EXPECT_EQ(format_point(p), "(1/4,1/2+1*sqrt(2))");
}

TEST(Domain, RegionExamples) {
  EXPECT_EQ(region_of(P("0", "0")).region, Region::Origin);
  RegionTag t = region_of(P("-3/2", "-1/2"));
  EXPECT_EQ(t.region, Region::SigmaDiagonal);
  EXPECT_EQ(t.sign_x, -1);
  EXPECT_EQ(t.sign_y, -1);
  EXPECT_EQ(region_of(P("1/4", "1/2")).region, Region::Q);
  EXPECT_EQ(region_of(P("1/2", "0")).region, Region::SigmaSegment);
  EXPECT_EQ(region_of(P("-1", "0")).region, Region::SigmaEnd);
  EXPECT_EQ(region_of(P("2", "1/3")).region, Region::VerticalEdge);
  EXPECT_EQ(region_of(P("3/2", "0")).region, Region::VerticalEdge);
}

TEST(Domain, InteriorChecks) {
  EXPECT_TRUE(in_interior(P("2", "1"), Scalar(2)));
  EXPECT_FALSE(in_interior(P("3", "0"), Scalar(2)));
  EXPECT_FALSE(in_interior(P("0", "-2"), Scalar(2)));
  EXPECT_THROW(canonicalize(P("0", "2"), Scalar(2)), DomainError);
  EXPECT_THROW(canonicalize(P("0", "0"), Scalar(0)), DomainError);
}

TEST(Domain, CanonicalExamples) {
  CanonicalForm a = canonicalize(P("-3/2", "-1/2"), Scalar(2));
  ASSERT_TRUE(a.is_sigma());
  EXPECT_EQ(std::get<CanonicalForm::SigmaPoint>(a.value).ax, Scalar::ratio(3, 2));
  EXPECT_EQ(std::get<CanonicalForm::SigmaPoint>(a.value).ay, Scalar::ratio(1, 2));

  CanonicalForm b = canonicalize(P("5/4", "1/2"), Scalar(2));
  ASSERT_FALSE(b.is_sigma());
  EXPECT_EQ(std::get<CanonicalForm::QClass>(b.value).y, Scalar::ratio(1, 2));
  EXPECT_EQ(std::get<CanonicalForm::QClass>(b.value).x_rep, Scalar::ratio(1, 4));

  // (2, 1/3) bounces once in the table of size 1 to (4/3, 1); q = 1 gives x* = 2/3
  Normalized n = normalize(P("2", "1/3"));
  EXPECT_TRUE(n.bounced);
  EXPECT_EQ(n.point, P("4/3", "1"));
  CanonicalForm c = canonicalize(P("2", "1/3"), Scalar(2));
  EXPECT_EQ(std::get<CanonicalForm::QClass>(c.value).y, Scalar(1));
  EXPECT_EQ(std::get<CanonicalForm::QClass>(c.value).x_rep, Scalar::ratio(2, 3));
}

TEST(Domain, IrrationalNormalForm) {
  // x and x + 2y + 2 and -x are one class
  Scalar y = parse_scalar("1/3+1/2*sqrt(2)");
  Scalar x = parse_scalar("1/5+1/7*sqrt(2)");
  Scalar base = reduce_x(x, y);
  EXPECT_EQ(reduce_x(x + Scalar(2) * y + Scalar(2), y), base);
  EXPECT_EQ(reduce_x(-x, y), base);
  EXPECT_EQ(reduce_x(x - Scalar(6) * y, y), base);
  EXPECT_NE(reduce_x(x + y, y), base);
}

TEST(DomainProperty, AlphaIndependenceAndReflections) {
  for (int i = 0; i < 1500; ++i) {
    Point p = oracle::random_point(Rational(3), 12);
    Scalar alpha = max(r_value(p), Scalar(0)) + Scalar::ratio(oracle::uniform(1, 20), 7);
    if (!in_interior(p, alpha)) continue;
    CanonicalForm c = canonicalize(p, alpha);
    ASSERT_EQ(c, canonicalize(p, alpha + Scalar::ratio(7, 3)));
    for (int sx : {1, -1})
      for (int sy : {1, -1}) ASSERT_EQ(canonicalize({p.x * Scalar(sx), p.y * Scalar(sy)}, alpha), c);
  }
}

TEST(DomainProperty, RationalRepresentativeInRange) {
  for (auto [pn, qd] : oracle::coprime_heights(12)) {
    Scalar y = Scalar::ratio(pn, qd);
    for (long j = -4 * qd * (pn + qd); j <= 4 * qd * (pn + qd); ++j) {
      Scalar x = Scalar::ratio(j, 4 * qd);
      Point p{x, y};
      if (!in_q(p)) continue;
      Scalar xs = std::get<CanonicalForm::QClass>(canonicalize(p, y + Scalar(1)).value).x_rep;
      ASSERT_LE(Scalar(0), xs);
      ASSERT_LE(xs, Scalar::ratio(1, qd));
      Scalar step = Scalar::ratio(2, qd);
      bool congruent = ((xs - x) / step).is_integer() || ((xs + x) / step).is_integer();
      ASSERT_TRUE(congruent) << format_point(p);
    }
  }
}

TEST(DomainProperty, RegionsPartition) {
  for (int i = 0; i < 5000; ++i) {
    Point p = oracle::random_point(Rational(2), 6);
    RegionTag t = region_of(p);
    Scalar ax = abs(p.x);
    Scalar ay = abs(p.y);
    bool sigma_eq = (ax == ay + Scalar(1)) || (ay.is_zero() && ax <= Scalar(1));
    ASSERT_EQ(is_sigma(t.region), sigma_eq) << format_point(p);
    ASSERT_EQ(in_sigma(p), sigma_eq);
    bool q = ay.sign() > 0 && ay > ax - Scalar(1);
    if (!sigma_eq) ASSERT_EQ(t.region == Region::Q, q) << format_point(p);
    Normalized n = normalize(p);
    ASSERT_TRUE(is_sigma(t.region) || in_q(n.point)) << format_point(p);
  }
}
