#pragma once

/// @file probes.hpp
/// Symmetric probes in [-1-alpha, 1+alpha] x [-alpha, alpha] and the
/// homology matrices of the induced Hamiltonian isotopies.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splittori/billiard.hpp"
#include "splittori/matrix.hpp"

namespace splittori {

/// A segment through an interior anchor, with primitive direction from `start`
/// to `end`, whose endpoints lie in the interiors of two edges.
struct Probe {
  Direction direction;
  Point anchor;
  Point start;
  Point end;
  Edge start_edge;
  Edge end_edge;
  Scalar alpha;
};

struct InvalidProbe {
  std::string reason;
};

using ProbeValidation = std::variant<Probe, InvalidProbe>;

/// A probe moving `from` to its mirror image `to` across the probe's midpoint.
struct ProbeStep {
  Probe probe;
  Point from;
  Point to;
  IntMatrix2 matrix;
};

namespace detail {

/// Inward unit normal of an edge of the rectangle.
inline std::pair<int, int> inward_normal(Edge e) {
  switch (e) {
    case Edge::Top: return {0, -1};
    case Edge::Bottom: return {0, 1};
    case Edge::Left: return {1, 0};
    case Edge::Right: return {-1, 0};
  }
  return {0, 0};
}

inline Point along(const Point& a, const Direction& v, const Scalar& t) {
  return {a.x + t * Scalar(v.dx), a.y + t * Scalar(v.dy)};
}

/// Maps accepted directions to the representative used for probes.
inline std::optional<Direction> normalize_direction(int dx, int dy) {
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  if ((dx == 1 && dy == 0) || (dx == 0 && dy == 1)) return Direction{dx, dy};
  if (dx == 1 && dy == 1) return Direction{1, 1};
  if (dx == 1 && dy == -1) return Direction{-1, 1};
  return std::nullopt;
}

}  // namespace detail

/// Edge containing a boundary point of the alpha-rectangle, or none at a vertex.
inline std::optional<Edge> boundary_edge(const Point& e, const Scalar& alpha) {
  bool vertical = abs(e.x) == Scalar(1) + alpha;
  bool horizontal = abs(e.y) == alpha;
  if (vertical && horizontal) return std::nullopt;
  if (horizontal) return e.y.sign() > 0 ? Edge::Top : Edge::Bottom;
  return e.x.sign() > 0 ? Edge::Right : Edge::Left;
}

/// Builds the probe with direction (dx, dy) through `anchor`.
///
/// Supported directions are horizontal, vertical and the two diagonals (any sign).
inline ProbeValidation validate_probe(int dx, int dy, const Point& anchor, const Scalar& alpha) {
  require_alpha(alpha);
  auto dir = detail::normalize_direction(dx, dy);
  if (!dir) return InvalidProbe{"unsupported-direction"};
  shared_radicand({anchor.x, anchor.y, alpha});
  Scalar w = Scalar(1) + alpha;
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  auto clip = [&](int comp, const Scalar& coord, const Scalar& bound) {
    if (comp == 0) return;
    Scalar a = (-bound - coord) / Scalar(comp);
    Scalar b = (bound - coord) / Scalar(comp);
    if (b < a) std::swap(a, b);
    if (!lo || a > *lo) lo = a;
    if (!hi || b < *hi) hi = b;
  };
  clip(dir->dx, anchor.x, w);
  clip(dir->dy, anchor.y, alpha);
  if (!(*lo < *hi)) return InvalidProbe{"line misses the rectangle"};
  Point start = detail::along(anchor, *dir, *lo);
  Point end = detail::along(anchor, *dir, *hi);
  auto se = boundary_edge(start, alpha);
  auto ee = boundary_edge(end, alpha);
  if (!se || !ee) return InvalidProbe{"segment hits a vertex"};
  if (!in_interior(anchor, alpha)) return InvalidProbe{"anchor is not in the open rectangle"};
  return Probe{*dir, anchor, start, end, *se, *ee, alpha};
}

/// Matrix I + (n_end - n_start) v^T, with v the probe direction and n the inward normals.
inline IntMatrix2 probe_matrix(const Probe& pr) {
  auto [sx, sy] = detail::inward_normal(pr.start_edge);
  auto [ex, ey] = detail::inward_normal(pr.end_edge);
  std::int64_t ddx = ex - sx;
  std::int64_t ddy = ey - sy;
  const Direction& v = pr.direction;
  return {1 + ddx * v.dx, ddx * v.dy, ddy * v.dx, 1 + ddy * v.dy};
}

/// Whether p lies strictly inside the probe segment.
inline bool on_probe(const Probe& pr, const Point& p) {
  const Direction& v = pr.direction;
  // Cross product with the direction must vanish.
  Scalar cross = (p.x - pr.anchor.x) * Scalar(v.dy) - (p.y - pr.anchor.y) * Scalar(v.dx);
  if (!cross.is_zero()) return false;
  Scalar t = v.dx != 0 ? (p.x - pr.start.x) / Scalar(v.dx) : (p.y - pr.start.y) / Scalar(v.dy);
  Scalar len = v.dx != 0 ? (pr.end.x - pr.start.x) / Scalar(v.dx) : (pr.end.y - pr.start.y) / Scalar(v.dy);
  return t.sign() > 0 && t < len;
}

/// Reflects p across the midpoint of the probe and records the homology action.
inline ProbeStep probe_action(const Probe& pr, const Point& p) {
  if (!on_probe(pr, p)) throw DomainError("point " + format_point(p) + " is not inside the probe");
  Point to{pr.start.x + pr.end.x - p.x, pr.start.y + pr.end.y - p.y};
  return {pr, p, to, probe_matrix(pr)};
}

/// Product M_k ... M_1 of a chained probe sequence.
inline IntMatrix2 compose_monodromy(const std::vector<ProbeStep>& steps) {
  IntMatrix2 m;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0 && !(steps[i - 1].to == steps[i].from))
      throw DomainError("probe sequence is not chained at step " + std::to_string(i));
    m = steps[i].matrix * m;
  }
  return m;
}

/// Probe step through p in direction (dx, dy); throws if the probe is invalid.
inline ProbeStep probe_step(int dx, int dy, const Point& p, const Scalar& alpha) {
  ProbeValidation v = validate_probe(dx, dy, p, alpha);
  if (auto* bad = std::get_if<InvalidProbe>(&v))
    throw DomainError("invalid probe through " + format_point(p) + ": " + bad->reason);
  return probe_action(std::get<Probe>(v), p);
}

/// Steps carrying p to its normal form (see `normalize`): reflections then at most one bounce.
inline std::vector<ProbeStep> normalization_path(const Point& p, const Scalar& alpha) {
  require_interior(p, alpha);
  std::vector<ProbeStep> steps;
  Point cur = p;
  if (cur.x.sign() < 0) {
    steps.push_back(probe_step(1, 0, cur, alpha));
    cur = steps.back().to;
  }
  if (cur.y.sign() < 0) {
    steps.push_back(probe_step(0, 1, cur, alpha));
    cur = steps.back().to;
  }
  Normalized n = normalize(p);
  if (n.bounced) {
    steps.push_back(probe_step(-1, 1, cur, alpha));
    cur = steps.back().to;
  }
  if (!(cur == n.point)) throw DomainError("internal: normalization path mismatch");
  return steps;
}

/// Reverses a chained sequence; every probe matrix is an involution.
inline std::vector<ProbeStep> reverse_path(const std::vector<ProbeStep>& steps) {
  std::vector<ProbeStep> out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back(probe_action(it->probe, it->to));
  return out;
}

/// Probe steps realising one step of the billiard walk from `from` to `to`,
/// both on the boundary of the same table; the probe is parallel to the path.
inline ProbeStep billiard_probe(const Point& from, const Point& to, const Scalar& alpha) {
  Scalar dx = to.x - from.x;
  Scalar dy = to.y - from.y;
  int sx = dx.sign();
  int sy = dy.sign();
  if (sx == 0 || sy == 0 || !(abs(dx) == abs(dy))) throw DomainError("internal: billiard segment is not diagonal");
  ProbeStep s = probe_step(sx, sy, from, alpha);
  if (!(s.to == to)) throw DomainError("internal: probe does not realise the billiard segment");
  return s;
}

namespace detail {

/// Appends reflection probes taking (s1*x, s2*y) to (x, y).
inline void append_reflections(std::vector<ProbeStep>& steps, Point cur, const Point& target,
                               const Scalar& alpha) {
  if (!(cur.x == target.x)) {
    steps.push_back(probe_step(1, 0, cur, alpha));
    cur = steps.back().to;
  }
  if (!(cur.y == target.y)) {
    steps.push_back(probe_step(0, 1, cur, alpha));
    cur = steps.back().to;
  }
  if (!(cur == target)) throw DomainError("internal: reflection mismatch");
}

inline bool is_reflection_of(const Point& a, const Point& b) {
  return abs(a.x) == abs(b.x) && abs(a.y) == abs(b.y);
}

}  // namespace detail

/// A chain of symmetric probes carrying p to q, or none when the points are
/// not equivalent. The billiard search is bounded by `max_steps` per branch.
inline std::optional<std::vector<ProbeStep>> witness_sequence(const Point& p, const Point& q,
                                                              const Scalar& alpha,
                                                              std::uint64_t max_steps = kDefaultMaxSteps) {
  require_interior(p, alpha);
  require_interior(q, alpha);
  shared_radicand({p.x, p.y, q.x, q.y, alpha});
  if (!(canonicalize(p, alpha) == canonicalize(q, alpha))) return std::nullopt;
  std::vector<ProbeStep> head = normalization_path(p, alpha);
  std::vector<ProbeStep> tail = reverse_path(normalization_path(q, alpha));
  Point p0 = normalize(p).point;
  Point q0 = normalize(q).point;
  std::vector<ProbeStep> middle;
  if (!(p0 == q0)) {
    Scalar r = r_value(p0);
    Edge edge = edge_of(p0, r);
    BilliardWalker walkers[2] = {BilliardWalker(p0, clockwise_direction(edge), r, max_steps),
                                 BilliardWalker(p0, counterclockwise_direction(edge), r, max_steps)};
    std::vector<ProbeStep> paths[2];
    Point last[2] = {p0, p0};
    int found = -1;
    if (detail::is_reflection_of(p0, q0)) found = 0;
    while (found < 0) {
      for (int b = 0; b < 2 && found < 0; ++b) {
        Point nxt = walkers[b].next().point;
        if (!(nxt == last[b])) paths[b].push_back(billiard_probe(last[b], nxt, alpha));
        last[b] = nxt;
        if (detail::is_reflection_of(nxt, q0)) found = b;
      }
    }
    middle = std::move(paths[found]);
    detail::append_reflections(middle, last[found], q0, alpha);
  }
  std::vector<ProbeStep> out = std::move(head);
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

/// Closed probe chains based at p, built from billiard returns of its normal
/// form to the reflections of itself; each element starts and ends at p.
inline std::vector<std::vector<ProbeStep>> probe_loops(const Point& p, const Scalar& alpha,
                                                       std::uint64_t walk_steps) {
  require_interior(p, alpha);
  std::vector<ProbeStep> head = normalization_path(p, alpha);
  std::vector<ProbeStep> tail = reverse_path(head);
  Point p0 = normalize(p).point;
  std::vector<std::vector<ProbeStep>> middles;
  auto add_fixing_probe = [&](int dx, int dy) {
    ProbeValidation v = validate_probe(dx, dy, p0, alpha);
    if (!std::holds_alternative<Probe>(v)) return;
    ProbeStep s = probe_action(std::get<Probe>(v), p0);
    if (s.to == p0) middles.push_back({s});
  };
  add_fixing_probe(1, 0);
  add_fixing_probe(0, 1);
  add_fixing_probe(1, 1);
  add_fixing_probe(-1, 1);
  if (!in_sigma(p0)) {
    Scalar r = r_value(p0);
    Edge edge = edge_of(p0, r);
    for (Direction d : {clockwise_direction(edge), counterclockwise_direction(edge)}) {
      BilliardWalker walker(p0, d, r, walk_steps + 1);
      std::vector<ProbeStep> path;
      Point last = p0;
      for (std::uint64_t i = 0; i < walk_steps; ++i) {
        auto step = walker.next();
        if (step.corner) break;
        path.push_back(billiard_probe(last, step.point, alpha));
        last = step.point;
        if (detail::is_reflection_of(last, p0)) {
          std::vector<ProbeStep> loop = path;
          detail::append_reflections(loop, last, p0, alpha);
          middles.push_back(std::move(loop));
        }
      }
    }
  }
  std::vector<std::vector<ProbeStep>> loops;
  for (auto& m : middles) {
    std::vector<ProbeStep> loop = head;
    loop.insert(loop.end(), m.begin(), m.end());
    loop.insert(loop.end(), tail.begin(), tail.end());
    loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace splittori
