#pragma once

/// @file billiard.hpp
/// 45-degree billiards in the rectangle [-1-r, 1+r] x [-r, r].

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "splittori/domain.hpp"

namespace splittori {

/// Default budget for any single simulation.
inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

struct Direction {
  int dx;
  int dy;
  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Folding map of the plane onto [-1-r, 1+r] x [-r, r].
inline Point fold(const Point& p, const Scalar& r) {
  if (r.sign() <= 0) throw DomainError("fold needs r > 0");
  Scalar w = Scalar(1) + r;
  Integer m = floor((p.x + w) / (Scalar(2) * w));
  Integer n = floor((p.y + r) / (Scalar(2) * r));
  Scalar x = p.x - Scalar(Rational(2 * m)) * w;
  Scalar y = p.y - Scalar(Rational(2 * n)) * r;
  if (m % 2 != 0) x = -x;
  if (n % 2 != 0) y = -y;
  return {x, y};
}

/// (x, y) -> ((-1)^m x + 2m(r+1), (-1)^n y + 2nr): a preimage branch of fold.
inline Point unfold_map(const Point& p, const Scalar& r, const Integer& m, const Integer& n) {
  Scalar x = m % 2 == 0 ? p.x : -p.x;
  Scalar y = n % 2 == 0 ? p.y : -p.y;
  return {x + Scalar(Rational(2 * m)) * (Scalar(1) + r), y + Scalar(Rational(2 * n)) * r};
}

enum class Edge { Top, Bottom, Left, Right };

inline const char* edge_name(Edge e) {
  switch (e) {
    case Edge::Top: return "top";
    case Edge::Bottom: return "bottom";
    case Edge::Left: return "left";
    case Edge::Right: return "right";
  }
  return "?";
}

/// Edge of [-1-r, 1+r] x [-r, r] that carries p; p must not be a vertex.
inline Edge edge_of(const Point& p, const Scalar& r) {
  Scalar w = Scalar(1) + r;
  bool horizontal = abs(p.y) == r;
  bool vertical = abs(p.x) == w;
  if (horizontal == vertical) throw DomainError("point " + format_point(p) + " is a vertex or off the boundary");
  if (horizontal) return p.y.sign() > 0 ? Edge::Top : Edge::Bottom;
  return p.x.sign() > 0 ? Edge::Right : Edge::Left;
}

/// Initial direction of the clockwise branch (k >= 0) from a boundary point.
inline Direction clockwise_direction(Edge e) {
  switch (e) {
    case Edge::Top: return {1, -1};
    case Edge::Right: return {-1, -1};
    case Edge::Bottom: return {-1, 1};
    case Edge::Left: return {1, 1};
  }
  return {0, 0};
}

/// Initial direction of the counterclockwise branch (k <= 0) from a boundary point.
inline Direction counterclockwise_direction(Edge e) {
  Direction d = clockwise_direction(e);
  if (e == Edge::Top || e == Edge::Bottom)
    d.dx = -d.dx;
  else
    d.dy = -d.dy;
  return d;
}

/// Walks a 45-degree billiard path from one admissible bouncing point to the next.
///
/// At a vertex the path retraces itself; the vertex is reported but not emitted.
class BilliardWalker {
 public:
  struct Step {
    Point point;
    std::optional<Point> corner;  ///< vertex passed on the way to `point`
  };

  BilliardWalker(Point start, Direction dir, Scalar r, std::uint64_t max_steps = kDefaultMaxSteps)
      : r_(std::move(r)), w_(Scalar(1) + r_), pos_(std::move(start)), dir_(dir), max_steps_(max_steps) {}

  const Point& position() const { return pos_; }
  const Direction& direction() const { return dir_; }
  std::uint64_t steps() const { return steps_; }

  Step next() {
    Step out;
    if (++steps_ > max_steps_)
      throw IterationLimitError("billiard simulation exceeded " + std::to_string(max_steps_) + " steps");
    for (;;) {
      auto [tx, ty] = distances();
      if (tx == ty) {
        pos_ = advance(tx);
        out.corner = pos_;
        dir_ = {-dir_.dx, -dir_.dy};
        continue;
      }
      if (tx < ty) {
        pos_ = advance(tx);
        dir_.dx = -dir_.dx;
      } else {
        pos_ = advance(ty);
        dir_.dy = -dir_.dy;
      }
      out.point = pos_;
      return out;
    }
  }

 private:
  std::pair<Scalar, Scalar> distances() const {
    Scalar tx = w_ - (dir_.dx > 0 ? pos_.x : -pos_.x);
    Scalar ty = r_ - (dir_.dy > 0 ? pos_.y : -pos_.y);
    return {tx, ty};
  }

  Point advance(const Scalar& t) const {
    return {dir_.dx > 0 ? pos_.x + t : pos_.x - t, dir_.dy > 0 ? pos_.y + t : pos_.y - t};
  }

  Scalar r_;
  Scalar w_;
  Point pos_;
  Direction dir_;
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
};

/// Vertex met between the admissible points with indices `from` and `from +- 1`.
struct CornerHit {
  std::int64_t from;
  std::int64_t to;
  Point corner;
  friend bool operator==(const CornerHit&, const CornerHit&) = default;
};

struct Trajectory {
  Point start;
  Scalar r;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
  std::vector<Point> points;  ///< points[i] is the point with index k_min + i
  std::vector<CornerHit> corner_hits;
  bool stationary = false;  ///< start lies in Sigma; every index maps to it

  const Point& at(std::int64_t k) const {
    if (k < k_min || k > k_max) throw DomainError("trajectory index out of range");
    return points[static_cast<std::size_t>(k - k_min)];
  }
};

/// Indexed bouncing points (x,y)_(k) for k_min <= k <= k_max.
inline Trajectory bouncing_points(const Point& p, std::int64_t k_min, std::int64_t k_max,
                                  std::uint64_t max_steps = kDefaultMaxSteps) {
  if (k_min > 0 || k_max < 0) throw DomainError("index range must contain 0");
  shared_radicand({p.x, p.y});
  Trajectory t;
  t.start = p;
  t.r = r_value(p);
  t.k_min = k_min;
  t.k_max = k_max;
  std::size_t count = static_cast<std::size_t>(k_max - k_min + 1);
  if (in_sigma(p)) {
    t.stationary = true;
    t.points.assign(count, p);
    return t;
  }
  t.points.resize(count);
  t.points[static_cast<std::size_t>(-k_min)] = p;
  Edge edge = edge_of(p, t.r);
  for (int branch : {1, -1}) {
    std::int64_t limit = branch > 0 ? k_max : -k_min;
    Direction d = branch > 0 ? clockwise_direction(edge) : counterclockwise_direction(edge);
    BilliardWalker walker(p, d, t.r, max_steps);
    for (std::int64_t i = 1; i <= limit; ++i) {
      auto step = walker.next();
      std::int64_t k = branch * i;
      if (step.corner) t.corner_hits.push_back({k - branch, k, *step.corner});
      t.points[static_cast<std::size_t>(k - k_min)] = step.point;
    }
  }
  return t;
}

/// Whether the billiard path through p in Q meets a vertex of its table.
///
/// With y = a/q in lowest terms this is x = b/q with b = a + q (mod 2); with y
/// irrational it is x = k1 + k2*y with k1, k2 both odd.
inline bool hits_corner(const Point& p) {
  if (!in_q(p)) throw DomainError("hits_corner needs a point of Q, got " + format_point(p));
  shared_radicand({p.x, p.y});
  if (p.y.is_rational()) {
    if (!p.x.is_rational()) return false;
    const Rational& y = p.y.rational_part();
    Rational scaled = p.x.rational_part() * Rational(y.get_den());
    if (scaled.get_den() != 1) return false;
    Integer diff = scaled.get_num() - y.get_num() - y.get_den();
    return diff % 2 == 0;
  }
  Rational k2 = p.x.surd_coefficient() / p.y.surd_coefficient();
  if (k2.get_den() != 1 || k2.get_num() % 2 == 0) return false;
  Rational k1 = p.x.rational_part() - k2 * p.y.rational_part();
  return k1.get_den() == 1 && k1.get_num() % 2 != 0;
}

/// Least k >= 1 with (x,y)_(j+k) = (x,y)_(j) for all j; 1 on Sigma, none for irrational r.
inline std::optional<std::int64_t> trajectory_period(const Point& p,
                                                     std::uint64_t max_steps = kDefaultMaxSteps) {
  shared_radicand({p.x, p.y});
  if (in_sigma(p)) return 1;
  Scalar r = r_value(p);
  if (!r.is_rational()) return std::nullopt;
  Direction cw = clockwise_direction(edge_of(p, r));
  BilliardWalker walker(p, cw, r, max_steps);
  std::vector<Point> seq{p};
  for (;;) {
    seq.push_back(walker.next().point);
    if (walker.position() == p && walker.direction() == cw) break;
  }
  seq.pop_back();
  const std::size_t n = seq.size();
  for (std::size_t k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i + k < n; ++i) ok = seq[i] == seq[i + k];
    if (ok) return static_cast<std::int64_t>(k);
  }
  return static_cast<std::int64_t>(n);
}

/// All admissible bouncing points of p (one period), in order of first appearance.
/// Requires rational r; for p in Sigma this is {p}.
inline std::vector<Point> orbit_points(const Point& p, std::uint64_t max_steps = kDefaultMaxSteps) {
  auto period = trajectory_period(p, max_steps);
  if (!period) throw DomainError("orbit of " + format_point(p) + " is infinite");
  Trajectory t = bouncing_points(p, 0, *period - 1, max_steps);
  std::vector<Point> out;
  for (const Point& q : t.points)
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  return out;
}

/// Reads SPLITTORI_MAX_STEPS, falling back to the default budget.
inline std::uint64_t max_steps_from_env() {
  if (const char* v = std::getenv("SPLITTORI_MAX_STEPS")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return n;
  }
  return kDefaultMaxSteps;
}

}  // namespace splittori
