#pragma once

/// @file recurrence.hpp
/// Cut-off strips around the lines y = +-x +- 1, their exact area, and the
/// base-point dynamics of the delta-billiard map.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "splittori/probes.hpp"

namespace splittori {

/// The four functionals f1 = y-x-1, f2 = y-x+1, f3 = y+x-1, f4 = y+x+1 (index 0..3).
inline Scalar strip_functional(int i, const Point& p) {
  switch (i) {
    case 0: return p.y - p.x - Scalar(1);
    case 1: return p.y - p.x + Scalar(1);
    case 2: return p.y + p.x - Scalar(1);
    case 3: return p.y + p.x + Scalar(1);
  }
  throw DomainError("strip index out of range");
}

/// Strips |f_i| < delta inside the alpha-rectangle, and the six regions they cut out.
///
/// Regions: U5 = {f1 >= d}, U1 = {f1 <= -d, f2 >= d}, U3 = {f2 <= -d},
/// U6 = {f4 <= -d}, U4 = {f4 >= d, f3 <= -d}, U2 = {f3 >= d}. The thickened
/// region U_i^delta drops the margin d (strict inequalities against 0).
struct StripConfig {
  Scalar alpha;
  Scalar delta;

  StripConfig(Scalar a, Scalar d) : alpha(std::move(a)), delta(std::move(d)) {
    require_alpha(alpha);
    if (delta.sign() < 0) throw DomainError("delta must be non-negative");
  }

  bool in_strip(int i, const Point& p) const { return abs(strip_functional(i, p)) < delta; }

  /// Whether p lies in the cut-off region P_delta.
  bool in_cutoff(const Point& p) const {
    for (int i = 0; i < 4; ++i)
      if (in_strip(i, p)) return true;
    return false;
  }

  /// Membership in U_i (margin = delta) or U_i^delta (margin = 0, strict), i = 1..6.
  bool in_region(int i, const Point& p, bool thickened) const {
    auto ge = [&](const Scalar& f) { return thickened ? f.sign() > 0 : f >= delta; };
    auto le = [&](const Scalar& f) { return thickened ? f.sign() < 0 : f <= -delta; };
    switch (i) {
      case 5: return ge(strip_functional(0, p));
      case 1: return le(strip_functional(0, p)) && ge(strip_functional(1, p));
      case 3: return le(strip_functional(1, p));
      case 6: return le(strip_functional(3, p));
      case 4: return ge(strip_functional(3, p)) && le(strip_functional(2, p));
      case 2: return ge(strip_functional(2, p));
    }
    throw DomainError("region index out of range");
  }
};

namespace detail {

using Polygon = std::vector<Point>;

/// Keeps the part of a convex polygon where a*x + b*y + c >= 0.
inline Polygon clip(const Polygon& poly, const Scalar& a, const Scalar& b, const Scalar& c) {
  Polygon out;
  auto val = [&](const Point& p) { return a * p.x + b * p.y + c; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % poly.size()];
    Scalar vc = val(cur);
    Scalar vn = val(nxt);
    if (vc.sign() >= 0) out.push_back(cur);
    if ((vc.sign() > 0 && vn.sign() < 0) || (vc.sign() < 0 && vn.sign() > 0)) {
      Scalar t = vc / (vc - vn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

inline Scalar polygon_area(const Polygon& poly) {
  if (poly.size() < 3) return Scalar(0);
  Scalar twice(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return abs(twice) / Scalar(2);
}

/// Coefficients (a, b, c) of f_i = a*x + b*y + c.
inline std::array<Scalar, 3> strip_coefficients(int i) {
  switch (i) {
    case 0: return {Scalar(-1), Scalar(1), Scalar(-1)};
    case 1: return {Scalar(-1), Scalar(1), Scalar(1)};
    case 2: return {Scalar(1), Scalar(1), Scalar(-1)};
    default: return {Scalar(1), Scalar(1), Scalar(1)};
  }
}

}  // namespace detail

/// Area of P_delta divided by the area of the alpha-rectangle, exactly.
inline Scalar cutoff_volume(const Scalar& alpha, const Scalar& delta) {
  StripConfig cfg(alpha, delta);
  if (delta.is_zero()) return Scalar(0);
  Scalar w = Scalar(1) + alpha;
  detail::Polygon rect{{-w, -alpha}, {w, -alpha}, {w, alpha}, {-w, alpha}};
  Scalar total(0);
  for (int mask = 1; mask < 16; ++mask) {
    detail::Polygon poly = rect;
    int bits = 0;
    for (int i = 0; i < 4 && !poly.empty(); ++i) {
      if (!(mask & (1 << i))) continue;
      ++bits;
      auto [a, b, c] = detail::strip_coefficients(i);
      poly = detail::clip(poly, -a, -b, delta - c);  // f < delta
      poly = detail::clip(poly, a, b, delta + c);    // f > -delta
    }
    Scalar area = detail::polygon_area(poly);
    total += (bits % 2 == 1) ? area : -area;
  }
  return total / (Scalar(4) * alpha * w);
}

/// Dyadic delta = alpha / 2^(j+2) with (N+1) * cutoff_volume(alpha, delta) < eps.
inline Scalar delta_for(const Scalar& eps, std::uint64_t n, const Scalar& alpha) {
  if (!(eps.sign() > 0)) throw DomainError("epsilon must be positive");
  Scalar delta = alpha / Scalar(4);
  Scalar budget(Rational(static_cast<unsigned long>(n + 1)));
  while (!(budget * cutoff_volume(alpha, delta) < eps)) delta = delta / Scalar(2);
  return delta;
}

/// Whether the first N admissible bouncing points (indices 1..N) are pairwise
/// distinct and distinct from p.
inline bool disjoint_iterates(const Point& p, std::uint64_t n, std::uint64_t max_steps = kDefaultMaxSteps) {
  if (in_sigma(p)) throw DomainError("disjoint_iterates needs a point outside Sigma");
  Trajectory t = bouncing_points(p, 0, static_cast<std::int64_t>(n), max_steps);
  for (std::size_t i = 0; i < t.points.size(); ++i)
    for (std::size_t j = i + 1; j < t.points.size(); ++j)
      if (t.points[i] == t.points[j]) return false;
  return true;
}

enum class GridStatus { Good, Sigma, Burned, Repeats };

inline const char* grid_status_name(GridStatus s) {
  switch (s) {
    case GridStatus::Good: return "good";
    case GridStatus::Sigma: return "sigma";
    case GridStatus::Burned: return "burned";
    case GridStatus::Repeats: return "repeats";
  }
  return "?";
}

/// Fate of a base point under N steps of the idealized delta-billiard: one
/// clockwise bounce per step, burned if any of the iterates 0..N is in P_delta.
inline GridStatus idealized_orbit_status(const Point& p, const StripConfig& cfg, std::uint64_t n) {
  if (in_sigma(p)) return GridStatus::Sigma;
  if (cfg.in_cutoff(p)) return GridStatus::Burned;
  Scalar r = r_value(p);
  BilliardWalker walker(p, clockwise_direction(edge_of(p, r)), r, n + 1);
  std::vector<Point> seen{p};
  bool repeats = false;
  for (std::uint64_t k = 1; k <= n; ++k) {
    Point q = walker.next().point;
    if (cfg.in_cutoff(q)) return GridStatus::Burned;
    if (!repeats && std::find(seen.begin(), seen.end(), q) != seen.end()) repeats = true;
    seen.push_back(std::move(q));
  }
  return repeats ? GridStatus::Repeats : GridStatus::Good;
}

/// Cell centre (i, j) of a G x G grid on the alpha-rectangle.
inline Point grid_point(const Scalar& alpha, std::uint64_t g, std::uint64_t i, std::uint64_t j) {
  Scalar w = Scalar(1) + alpha;
  Rational fi(static_cast<unsigned long>(2 * i + 1), static_cast<unsigned long>(2 * g));
  Rational fj(static_cast<unsigned long>(2 * j + 1), static_cast<unsigned long>(2 * g));
  fi.canonicalize();
  fj.canonicalize();
  return {-w + Scalar(2) * w * Scalar(fi), -alpha + Scalar(2) * alpha * Scalar(fj)};
}

/// Visits every grid cell centre with its status.
inline void grid_scan(const Scalar& alpha, const Scalar& delta, std::uint64_t n, std::uint64_t g,
                      const std::function<void(std::uint64_t, std::uint64_t, const Point&, GridStatus)>& visit) {
  if (g == 0) throw DomainError("grid resolution must be positive");
  StripConfig cfg(alpha, delta);
  for (std::uint64_t i = 0; i < g; ++i)
    for (std::uint64_t j = 0; j < g; ++j) {
      Point p = grid_point(alpha, g, i, j);
      visit(i, j, p, idealized_orbit_status(p, cfg, n));
    }
}

/// Fraction of grid points with N pairwise-distinct, never-burned iterates.
inline Rational simulate_delta_billiard(const Scalar& alpha, const Scalar& delta, std::uint64_t n,
                                        std::uint64_t g) {
  std::uint64_t good = 0;
  grid_scan(alpha, delta, n, g, [&](std::uint64_t, std::uint64_t, const Point&, GridStatus s) {
    if (s == GridStatus::Good) ++good;
  });
  Rational f(static_cast<unsigned long>(good), static_cast<unsigned long>(g * g));
  f.canonicalize();
  return f;
}

/// One application of the six-map composition phi_6 o ... o phi_1 at the base-point
/// level. phi_i reflects points of U_i through the probe with direction (1,1)
/// (i odd) or (1,-1) (i even), fixes points outside U_i^delta, and burns the rest.
inline std::optional<Point> psi_delta(const Point& p, const StripConfig& cfg) {
  Point cur = p;
  for (int i = 1; i <= 6; ++i) {
    if (cfg.in_region(i, cur, false)) {
      int dy = (i % 2 == 1) ? 1 : -1;
      cur = probe_step(1, dy, cur, cfg.alpha).to;
    } else if (cfg.in_region(i, cur, true)) {
      return std::nullopt;
    }
  }
  return cur;
}

}  // namespace splittori
