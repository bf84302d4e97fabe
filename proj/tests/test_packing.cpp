#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace splittori;

namespace {

Point P(const char* x, const char* y) { return {parse_scalar(x), parse_scalar(y)}; }

Cardinality card(long n) { return Cardinality(Integer(n)); }

}  // namespace

TEST(Packing, ToricExamples) {
  Scalar a(2);
  EXPECT_EQ(toric_packing_number(P("0", "0"), a), card(1));
  EXPECT_EQ(toric_packing_number(P("1/2", "0"), a), card(2));
  EXPECT_EQ(toric_packing_number(P("-1", "0"), a), card(2));
  EXPECT_EQ(toric_packing_number(P("3/2", "1/2"), a), card(4));
  EXPECT_EQ(toric_packing_number(P("0", "1"), a), card(2));
  EXPECT_EQ(toric_packing_number(P("1/4", "1/2"), a), card(16));
  EXPECT_EQ(toric_packing_number(P("1/2", "1/2"), a), card(4));
  EXPECT_EQ(toric_packing_number(P("1", "1/2"), a), card(8));
  EXPECT_TRUE(toric_packing_number(P("1/3", "1/2*sqrt(2)"), a).is_infinite());
  // the oracle agrees on the rational anchors
  EXPECT_EQ(oracle::brute_packing(P("0", "1")), 2u);
  EXPECT_EQ(oracle::brute_packing(P("1/4", "1/2")), 16u);
}

TEST(Packing, PsBound) {
  EXPECT_EQ(ps_upper_bound(Scalar(0)), Integer(2));
  EXPECT_EQ(ps_upper_bound(Scalar::ratio(1, 3)), Integer(3));
  EXPECT_EQ(ps_upper_bound(Scalar::ratio(-1, 3)), Integer(3));
  EXPECT_EQ(ps_upper_bound(Scalar::ratio(1, 2)), Integer(4));
  EXPECT_FALSE(ps_upper_bound(Scalar(1)).has_value());
  EXPECT_FALSE(ps_upper_bound(Scalar(2)).has_value());
  // least k with |x| < (k-1)/(k+1), scanned directly
  for (long j = -49; j <= 49; ++j) {
    Scalar x = Scalar::ratio(j, 50);
    long k = 2;
    while (!(abs(x) < Scalar::ratio(k - 1, k + 1))) ++k;
    ASSERT_EQ(ps_upper_bound(x), Integer(k)) << j;
  }
}

TEST(Packing, KnownValues) {
  Scalar a(2);
  auto origin = known_packing_number(P("0", "0"), a);
  ASSERT_TRUE(origin.has_value());
  EXPECT_EQ(origin->value, card(1));
  EXPECT_EQ(origin->source, KnownPackingSource::Nondisplaceable);
  auto inner = known_packing_number(P("1/5", "0"), a);
  ASSERT_TRUE(inner.has_value());
  EXPECT_EQ(inner->value, card(2));
  EXPECT_FALSE(known_packing_number(P("1/3", "0"), a).has_value());
  auto irr = known_packing_number(P("1/3", "1/2*sqrt(2)"), a);
  ASSERT_TRUE(irr.has_value());
  EXPECT_TRUE(irr->value.is_infinite());
  EXPECT_FALSE(known_packing_number(P("1/4", "1/2"), a).has_value());
  // the band ((k-2)/k, (k-1)/(k+1)) only with the small-alpha assertion
  EXPECT_FALSE(known_packing_number(P("2/5", "0"), a).has_value());
  auto band = known_packing_number(P("2/5", "0"), a, true);
  ASSERT_TRUE(band.has_value());
  EXPECT_EQ(band->value, card(3));
  EXPECT_EQ(known_packing_number(P("11/20", "0"), a, true)->value, card(4));
  EXPECT_FALSE(known_packing_number(P("1/2", "0"), a, true).has_value());
}

TEST(Packing, BallTypes) {
  BallTypes c = ball_type(P("-3/2", "-1/2"), Scalar(2));
  EXPECT_TRUE(c.clifford);
  EXPECT_FALSE(c.chekanov);
  EXPECT_FALSE(c.nonmonotone);
  BallTypes h = ball_type(P("1/2", "1/2"), Scalar(1));
  EXPECT_TRUE(h.chekanov);
  EXPECT_FALSE(h.nonmonotone);
  EXPECT_FALSE(h.clifford);
  BallTypes n = ball_type(P("3/10", "1/2"), Scalar(1));
  EXPECT_TRUE(n.nonmonotone);
  EXPECT_FALSE(n.chekanov);
  EXPECT_FALSE(n.clifford);
  BallTypes o = ball_type(P("0", "0"), Scalar(1));
  EXPECT_FALSE(o.clifford || o.chekanov || o.nonmonotone);
}

TEST(Packing, ModelImages) {
  EXPECT_EQ(chekanov_image(Scalar::ratio(1, 2), Scalar(1)), P("-1/2", "1/2"));
  EXPECT_EQ(chekanov_image(Scalar(1), Scalar(2)), P("0", "1"));
  EXPECT_THROW(chekanov_image(Scalar(1), Scalar(1)), DomainError);
  EXPECT_THROW(chekanov_image(Scalar(0), Scalar(1)), DomainError);
  EXPECT_EQ(product_image(Scalar::ratio(1, 2), Scalar::ratio(1, 2), Scalar(1)), P("-3/2", "-1/2"));
  EXPECT_EQ(product_image(Scalar(1), Scalar(2), Scalar(2)), P("-2", "0"));
  EXPECT_THROW(product_image(Scalar(1), Scalar(1), Scalar(1)), DomainError);
  EXPECT_FALSE(chek_nonmonotone_equiv(Scalar::ratio(1, 2), Scalar(1)));
  EXPECT_TRUE(chek_nonmonotone_equiv(Scalar::ratio(1, 3), Scalar(1)));
  EXPECT_FALSE(chek_nonmonotone_equiv(Scalar(1), Scalar(2)));
  EXPECT_TRUE(chek_nonmonotone_equiv(parse_scalar("1/2*sqrt(2)"), Scalar(1)));
}

TEST(Packing, CardinalityOrder) {
  EXPECT_TRUE(card(3) <= card(4));
  EXPECT_FALSE(card(5) <= card(4));
  EXPECT_TRUE(card(5) <= Cardinality::infinite());
  EXPECT_FALSE(Cardinality::infinite() <= card(5));
  EXPECT_EQ(Cardinality::infinite().str(), "inf");
  EXPECT_THROW(Cardinality::infinite().value(), DomainError);
}

TEST(PackingProperty, FormulaMatchesBruteForce) {
  for (auto [pn, qd] : oracle::coprime_heights(15)) {
    Scalar y = Scalar::ratio(pn, qd);
    for (long j = 0; j <= 3 * (pn + qd) + 3 * qd; ++j) {
      Point p{Scalar::ratio(j, 3 * qd), y};
      if (!in_q(p)) continue;
      ASSERT_EQ(toric_packing_number(p, y + Scalar(1)), card(static_cast<long>(oracle::brute_packing(p))))
          << format_point(p);
    }
  }
}

TEST(PackingProperty, EquivalentPointsShareTheCount) {
  Scalar a(3);
  for (int i = 0; i < 400; ++i) {
    Point p = oracle::random_point(Rational(3), 8);
    Point q = p;
    for (int s = 0; s < 5; ++s) {
      const int dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {-1, 1}};
      const int* d = dirs[oracle::uniform(0, 3)];
      ProbeValidation v = validate_probe(d[0], d[1], q, a);
      if (auto* pr = std::get_if<Probe>(&v)) q = probe_action(*pr, q).to;
    }
    ASSERT_EQ(toric_packing_number(p, a), toric_packing_number(q, a)) << format_point(p) << " " << format_point(q);
  }
}

TEST(PackingProperty, ToricBelowKnown) {
  for (long j = -49; j <= 49; ++j) {
    Point p{Scalar::ratio(j, 50), Scalar(0)};
    for (bool small : {false, true}) {
      auto known = known_packing_number(p, Scalar(1), small);
      if (known) ASSERT_TRUE(toric_packing_number(p, Scalar(1)) <= known->value) << j;
    }
  }
}

TEST(PackingProperty, BallTypeExclusions) {
  bool mixed_witness = false;
  for (long i = 1; i < 120; ++i)
    for (long j = 1; j < 80; ++j) {
      Point p{Scalar::ratio(-360 + 6 * i, 120), Scalar::ratio(-160 + 4 * j, 80)};
      if (!in_interior(p, Scalar(2))) continue;
      BallTypes b = ball_type(p, Scalar(2));
      ASSERT_FALSE(b.clifford && b.chekanov) << format_point(p);
      ASSERT_FALSE(b.clifford && b.nonmonotone) << format_point(p);
      mixed_witness = mixed_witness || (b.chekanov && b.nonmonotone);
    }
  EXPECT_TRUE(mixed_witness);
}

TEST(PackingProperty, ChekanovImagesHitTheLowerLeftCorner) {
  for (int i = 0; i < 300; ++i) {
    Scalar alpha = Scalar::ratio(oracle::uniform(1, 30), oracle::uniform(1, 6));
    Scalar a = alpha * Scalar::ratio(oracle::uniform(1, 99), 100);
    Point p = chekanov_image(a, alpha);
    EXPECT_TRUE(ball_type(p, alpha).chekanov) << format_point(p);
    // the path runs along y = x + 1 into (-1-r, -r)
    Scalar r = r_value(p);
    Trajectory t = bouncing_points(p, -2, 2);
    bool lower_left = false;
    for (const auto& h : t.corner_hits) lower_left = lower_left || h.corner == Point{-(Scalar(1) + r), -r};
    EXPECT_TRUE(lower_left) << format_point(p);
  }
}
