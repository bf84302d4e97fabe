#pragma once

/// @file domain.hpp
/// Points of the moment rectangle, the singular set and the fundamental domain.

#include <string>
#include <string_view>
#include <variant>

#include "splittori/scalar.hpp"

namespace splittori {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
};

inline std::string format_point(const Point& p) {
  return "(" + format_scalar(p.x) + "," + format_scalar(p.y) + ")";
}

/// Parses "(x,y)" where x and y use the scalar grammar.
inline Point parse_point(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw ParseError("cannot parse point '" + std::string(text) + "': expected (x,y)");
  std::size_t comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw ParseError("cannot parse point '" + std::string(text) + "': expected one comma");
  Point p{parse_scalar(s.substr(1, comma - 1)), parse_scalar(s.substr(comma + 1, s.size() - comma - 2))};
  shared_radicand({p.x, p.y});
  return p;
}

/// r(x,y) = max(|x| - 1, |y|): the table whose boundary carries (x,y).
inline Scalar r_value(const Point& p) { return max(abs(p.x) - Scalar(1), abs(p.y)); }

/// Interior of [-1-alpha, 1+alpha] x [-alpha, alpha].
inline bool in_interior(const Point& p, const Scalar& alpha) {
  return abs(p.x) < Scalar(1) + alpha && abs(p.y) < alpha;
}

inline void require_alpha(const Scalar& alpha) {
  if (alpha.sign() <= 0) throw DomainError("alpha must be positive, got " + format_scalar(alpha));
}

inline void require_interior(const Point& p, const Scalar& alpha) {
  require_alpha(alpha);
  if (!in_interior(p, alpha))
    throw DomainError("point " + format_point(p) + " is not in the open rectangle for alpha=" +
                      format_scalar(alpha));
}

/// Sigma: |x| = |y| + 1, or y = 0 with |x| <= 1.
inline bool in_sigma(const Point& p) {
  if (p.y.is_zero()) return abs(p.x) <= Scalar(1);
  return abs(p.x) == abs(p.y) + Scalar(1);
}

/// Fundamental domain: y > 0 and y > |x| - 1.
inline bool in_q(const Point& p) { return p.y.sign() > 0 && p.y > abs(p.x) - Scalar(1); }

enum class Region {
  Origin,        ///< (0,0)
  SigmaSegment,  ///< y = 0, 0 < |x| < 1
  SigmaEnd,      ///< (+-1, 0)
  SigmaDiagonal, ///< |x| = |y| + 1, y != 0
  Q,             ///< fundamental domain after reflection
  VerticalEdge,  ///< |x| - 1 > |y|: the point sits on a vertical edge of its table
};

inline const char* region_name(Region r) {
  switch (r) {
    case Region::Origin: return "origin";
    case Region::SigmaSegment: return "sigma-segment";
    case Region::SigmaEnd: return "sigma-end";
    case Region::SigmaDiagonal: return "sigma-diagonal";
    case Region::Q: return "Q";
    case Region::VerticalEdge: return "vertical-edge";
  }
  return "?";
}

/// Region of the reflected point (sign_x * x, sign_y * y), which has x >= 0, y >= 0.
struct RegionTag {
  Region region;
  int sign_x;
  int sign_y;

  friend bool operator==(const RegionTag&, const RegionTag&) = default;
};

inline bool is_sigma(Region r) {
  return r == Region::Origin || r == Region::SigmaSegment || r == Region::SigmaEnd ||
         r == Region::SigmaDiagonal;
}

inline RegionTag region_of(const Point& p) {
  RegionTag t{Region::Q, p.x.sign() < 0 ? -1 : 1, p.y.sign() < 0 ? -1 : 1};
  Scalar x = abs(p.x);
  Scalar y = abs(p.y);
  Scalar one(1);
  if (y.is_zero()) {
    if (x.is_zero())
      t.region = Region::Origin;
    else if (x < one)
      t.region = Region::SigmaSegment;
    else if (x == one)
      t.region = Region::SigmaEnd;
    else
      t.region = Region::VerticalEdge;
  } else if (x == y + one) {
    t.region = Region::SigmaDiagonal;
  } else if (y > x - one) {
    t.region = Region::Q;
  } else {
    t.region = Region::VerticalEdge;
  }
  return t;
}

/// Representative of an equivalence class of split tori.
///
/// Sigma points are determined by (|x|, |y|). Other points are determined by
/// y > 0 of their fundamental-domain image and a reduced x.
struct CanonicalForm {
  struct SigmaPoint {
    Scalar ax;
    Scalar ay;
    friend bool operator==(const SigmaPoint&, const SigmaPoint&) = default;
  };
  struct QClass {
    Scalar y;
    Scalar x_rep;
    friend bool operator==(const QClass&, const QClass&) = default;
  };

  std::variant<SigmaPoint, QClass> value;

  bool is_sigma() const { return std::holds_alternative<SigmaPoint>(value); }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline std::string format_canonical(const CanonicalForm& c) {
  if (const auto* s = std::get_if<CanonicalForm::SigmaPoint>(&c.value))
    return "Sigma" + format_point({s->ax, s->ay});
  const auto& q = std::get<CanonicalForm::QClass>(c.value);
  return "Q[y=" + format_scalar(q.y) + ",x*=" + format_scalar(q.x_rep) + "]";
}

/// Result of moving a point into Sigma or Q by reflections and at most one bounce.
struct Normalized {
  Point point;           ///< in Sigma or Q, with x, y >= 0 for Sigma and y > 0 for Q
  RegionTag tag;         ///< region of the input point
  Point reflected;       ///< (sign_x * x, sign_y * y)
  bool bounced = false;  ///< a vertical-edge point was carried to the top edge
};

/// Reflects into the first quadrant and carries a vertical-edge point (1+r, y0)
/// along its billiard path to (1 + y0, r) on the top edge.
inline Normalized normalize(const Point& p) {
  Normalized n;
  n.tag = region_of(p);
  n.reflected = {abs(p.x), abs(p.y)};
  n.point = n.reflected;
  if (n.tag.region == Region::VerticalEdge) {
    Scalar r = n.reflected.x - Scalar(1);
    n.point = {Scalar(1) + n.reflected.y, r};
    n.bounced = true;
  }
  return n;
}

/// Reduces x modulo the group generated by x -> -x, x -> x + 2, x -> x + 2y.
inline Scalar reduce_x(const Scalar& x, const Scalar& y) {
  shared_radicand({x, y});
  if (y.is_rational()) {
    const Rational& yq = y.rational_part();
    Scalar half(Rational(1, 1) / Rational(yq.get_den()));  // 1/q
    Scalar m = mod(x, half * Scalar(2));
    return m > half ? half * Scalar(2) - m : m;
  }
  const Rational& a = y.rational_part();
  const Rational& b = y.surd_coefficient();
  std::uint64_t d = y.radicand();
  Rational step = 2 * abs(b);
  bool have = false;
  Rational best_v;
  Rational best_u;
  for (int eps : {1, -1}) {
    Rational xu = x.rational_part() * eps;
    Rational xv = x.surd_coefficient() * eps;
    Integer j = -detail::floor_rational(xv / step);
    Rational v = xv + Rational(j) * step;
    Integer k2 = sgn(b) > 0 ? j : Integer(-j);
    Rational u = xu + 2 * Rational(k2) * a;
    u = u - 2 * Rational(detail::floor_rational(u / 2));
    if (!have || v < best_v || (v == best_v && u < best_u)) {
      best_v = v;
      best_u = u;
      have = true;
    }
  }
  return Scalar(best_u, best_v, d);
}

/// Canonical representative; two points are equivalent iff their forms are equal.
inline CanonicalForm canonicalize(const Point& p, const Scalar& alpha) {
  require_interior(p, alpha);
  Normalized n = normalize(p);
  if (is_sigma(n.tag.region)) return {CanonicalForm::SigmaPoint{n.point.x, n.point.y}};
  return {CanonicalForm::QClass{n.point.y, reduce_x(n.point.x, n.point.y)}};
}

}  // namespace splittori
