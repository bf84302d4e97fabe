#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace splittori;

namespace {

Point P(const char* x, const char* y) { return {parse_scalar(x), parse_scalar(y)}; }

Probe valid(int dx, int dy, const Point& anchor, const Scalar& alpha) {
  ProbeValidation v = validate_probe(dx, dy, anchor, alpha);
  if (auto* bad = std::get_if<InvalidProbe>(&v)) ADD_FAILURE() << bad->reason;
  return std::get<Probe>(v);
}

std::string reason(int dx, int dy, const Point& anchor, const Scalar& alpha) {
  ProbeValidation v = validate_probe(dx, dy, anchor, alpha);
  auto* bad = std::get_if<InvalidProbe>(&v);
  return bad ? bad->reason : "valid";
}

bool lower_triangular_form(const IntMatrix2& m) {
  return m.b == 0 && (m.a == 1 || m.a == -1) && (m.d == 1 || m.d == -1) && m.c % 2 == 0;
}

/// Random point of Q with rational height p/q, p + q <= 9, off the vertex set.
Point random_corner_free_q_point() {
  for (;;) {
    long q = oracle::uniform(1, 8);
    long p = oracle::uniform(1, 9 - q);
    if (std::gcd(p, q) != 1) continue;
    Scalar y = Scalar::ratio(p, q);
    long den = q * oracle::uniform(1, 6);
    Point pt{Scalar::ratio(oracle::uniform(0, den * (p + q) / q + den), den), y};
    if (in_q(pt) && !hits_corner(pt)) return pt;
  }
}

}  // namespace

TEST(Probes, ValidationExamples) {
  EXPECT_EQ(reason(1, 0, P("1/3", "-1/5"), Scalar(1)), "valid");
  EXPECT_EQ(reason(0, 1, P("-7/4", "1/2"), Scalar(1)), "valid");
  EXPECT_EQ(reason(1, 1, P("0", "1/2"), Scalar(1)), "valid");
  EXPECT_EQ(reason(-1, 1, P("1/4", "1/2"), Scalar(2)), "valid");
  EXPECT_EQ(reason(2, 1, P("0", "0"), Scalar(1)), "unsupported-direction");
  EXPECT_EQ(reason(0, 0, P("0", "0"), Scalar(1)), "unsupported-direction");
}

TEST(Probes, VertexHittingDiagonalIsRejected) {
  // (0,1) is on the boundary of the unit table; both diagonals run into vertices
  EXPECT_EQ(reason(1, 1, P("0", "1"), Scalar(1)), "segment hits a vertex");
  EXPECT_EQ(reason(-1, 1, P("0", "1"), Scalar(1)), "segment hits a vertex");
  EXPECT_EQ(reason(0, 1, P("0", "1"), Scalar(1)), "anchor is not in the open rectangle");
}

TEST(Probes, VerticalReflection) {
  ProbeStep s = probe_action(valid(0, 1, P("0", "1"), Scalar(2)), P("0", "1"));
  EXPECT_EQ(s.to, P("0", "-1"));
  EXPECT_EQ(s.matrix, IntMatrix2::diag(1, -1));
  ProbeStep h = probe_step(1, 0, P("1/3", "1"), Scalar(2));
  EXPECT_EQ(h.to, P("-1/3", "1"));
  EXPECT_EQ(h.matrix, IntMatrix2::diag(-1, 1));
}

TEST(Probes, DiagonalAcrossTheHorizontalEdges) {
  Probe pr = valid(1, -1, P("1/4", "1/2"), Scalar(2));
  EXPECT_TRUE((pr.start_edge == Edge::Top && pr.end_edge == Edge::Bottom) ||
              (pr.start_edge == Edge::Bottom && pr.end_edge == Edge::Top));
  ProbeStep s = probe_action(pr, P("1/4", "1/2"));
  EXPECT_EQ(s.to, P("5/4", "-1/2"));
  EXPECT_EQ(s.matrix.a, 1);
  EXPECT_EQ(s.matrix.b, 0);
  EXPECT_TRUE(s.matrix.c == 2 || s.matrix.c == -2);
  EXPECT_EQ(s.matrix.d, -1);
}

TEST(Probes, DiagonalAcrossACorner) {
  // through (3/2,1/2) in the table of size 2: x + y = 2 meets the top edge and the right edge
  Probe pr = valid(-1, 1, P("3/2", "1/2"), Scalar(2));
  IntMatrix2 m = probe_action(pr, P("3/2", "1/2")).matrix;
  EXPECT_TRUE(m == IntMatrix2::swap() || m == -IntMatrix2::swap()) << format_matrix(m);
  EXPECT_EQ(reason(1, 1, P("3/2", "1/2"), Scalar(2)), "segment hits a vertex");
}

TEST(Probes, PointOffTheProbe) {
  Probe pr = valid(1, 1, P("0", "1/2"), Scalar(2));
  EXPECT_THROW(probe_action(pr, P("1/3", "1/2")), DomainError);
  EXPECT_TRUE(on_probe(pr, P("1/2", "1")));
}

TEST(Probes, WitnessExamples) {
  auto w = witness_sequence(P("1/4", "1/2"), P("5/4", "1/2"), Scalar(2));
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 2u);
  EXPECT_EQ((*w)[0].to, P("5/4", "-1/2"));
  EXPECT_EQ((*w)[1].to, P("5/4", "1/2"));
  EXPECT_EQ((*w)[1].probe.direction, (Direction{0, 1}));
  // 1/4 = 5/4 + 2*0 + 2*(-1)*(1/2)
  EXPECT_EQ(compose_monodromy(*w), (IntMatrix2{1, 0, -2, 1}));

  auto self = witness_sequence(P("1/4", "1/2"), P("1/4", "1/2"), Scalar(2));
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->empty());
  EXPECT_FALSE(witness_sequence(P("1/4", "1/2"), P("1/2", "1/2"), Scalar(2)).has_value());
}

TEST(Probes, ComposeChecksChaining) {
  EXPECT_EQ(compose_monodromy({}), IntMatrix2::identity());
  ProbeStep a = probe_step(1, 0, P("1/3", "1"), Scalar(2));
  ProbeStep b = probe_step(0, 1, P("1/3", "1"), Scalar(2));
  EXPECT_THROW(compose_monodromy({a, b}), DomainError);
}

TEST(Probes, LoopAtTwoThirdsOne) {
  auto loops = probe_loops(P("2/3", "1"), Scalar(2), 64);
  ASSERT_FALSE(loops.empty());
  MonodromyGroup g = monodromy_group(P("2/3", "1"), Scalar(2));
  bool nontrivial = false;
  for (const auto& loop : loops) {
    EXPECT_EQ(loop.front().from, P("2/3", "1"));
    EXPECT_EQ(loop.back().to, P("2/3", "1"));
    IntMatrix2 m = compose_monodromy(loop);
    EXPECT_TRUE(lower_triangular_form(m)) << format_matrix(m);
    EXPECT_TRUE(monodromy_membership(m, g)) << format_matrix(m);
    nontrivial = nontrivial || !(m == IntMatrix2::identity());
  }
  EXPECT_TRUE(nontrivial);
}

TEST(ProbesProperty, ProbeActionIsAnInvolution) {
  const int dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {-1, 1}};
  for (int i = 0; i < 3000; ++i) {
    Scalar alpha = Scalar::ratio(oracle::uniform(1, 12), oracle::uniform(1, 4));
    Point p = oracle::random_point(alpha.as_rational(), 10);
    const int* d = dirs[i % 4];
    ProbeValidation v = validate_probe(d[0], d[1], p, alpha);
    if (!std::holds_alternative<Probe>(v)) continue;
    const Probe& pr = std::get<Probe>(v);
    ProbeStep s = probe_action(pr, p);
    ASSERT_TRUE(in_interior(s.to, alpha));
    ProbeStep back = probe_action(pr, s.to);
    ASSERT_EQ(back.to, p);
    ASSERT_EQ(back.matrix, s.matrix.inverse());
    ASSERT_EQ(s.matrix * s.matrix, IntMatrix2::identity());
    ASSERT_TRUE(s.matrix.det() == 1 || s.matrix.det() == -1);
  }
}

TEST(ProbesProperty, WitnessReplaysTheBilliard) {
  Scalar alpha(12);
  for (int i = 0; i < 150; ++i) {
    Point p = random_corner_free_q_point();
    Trajectory t = bouncing_points(p, -64, 64);
    Point q = t.at(oracle::uniform(-12, 12));
    q = {abs(q.x), abs(q.y)};
    if (!in_q(q)) continue;
    auto w = witness_sequence(p, q, alpha);
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(w->empty() ? p : w->back().to, q);
    std::vector<Point> diag;
    for (const auto& s : *w)
      if (s.probe.direction.dx != 0 && s.probe.direction.dy != 0) diag.push_back(s.to);
    bool forward = true, backward = true;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      forward = forward && diag[k] == t.at(static_cast<std::int64_t>(k) + 1);
      backward = backward && diag[k] == t.at(-static_cast<std::int64_t>(k) - 1);
    }
    ASSERT_TRUE(forward || backward) << format_point(p) << " -> " << format_point(q);
  }
}

TEST(ProbesProperty, UnfoldingFormOfCornerFreeWitnesses) {
  Scalar alpha(12);
  int checked = 0;
  while (checked < 150) {
    Point p = random_corner_free_q_point();
    Trajectory t = bouncing_points(p, -40, 40);
    Point q = t.at(oracle::uniform(-20, 20));
    q = {abs(q.x), abs(q.y)};
    if (!in_q(q)) continue;
    auto w = witness_sequence(p, q, alpha);
    ASSERT_TRUE(w.has_value());
    auto form = oracle::solve_witness_form(p, q, *w);
    ASSERT_TRUE(form.has_value()) << format_point(p) << " -> " << format_point(q);
    ASSERT_TRUE(form->matches(compose_monodromy(*w)))
        << format_point(p) << " -> " << format_point(q) << " " << format_matrix(compose_monodromy(*w));
    ++checked;
  }
}

TEST(ProbesProperty, LoopMatricesHaveTheExpectedForm) {
  for (int i = 0; i < 60; ++i) {
    Point p = random_corner_free_q_point();
    for (const auto& loop : probe_loops(p, Scalar(12), 200)) {
      IntMatrix2 m = compose_monodromy(loop);
      ASSERT_TRUE(lower_triangular_form(m)) << format_point(p) << " " << format_matrix(m);
    }
  }
}
