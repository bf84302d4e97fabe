#pragma once

/// @file packing.hpp
/// Toric packing numbers, known packing numbers and ball-embeddability types.

#include <optional>
#include <string>

#include "splittori/billiard.hpp"

namespace splittori {

/// Non-negative integer or infinity.
class Cardinality {
 public:
  static Cardinality infinite() {
    Cardinality c;
    c.infinite_ = true;
    return c;
  }
  explicit Cardinality(Integer n) : value_(std::move(n)) {}

  bool is_infinite() const { return infinite_; }
  const Integer& value() const {
    if (infinite_) throw DomainError("cardinality is infinite");
    return value_;
  }

  friend bool operator==(const Cardinality& a, const Cardinality& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<=(const Cardinality& a, const Cardinality& b) {
    if (b.infinite_) return true;
    if (a.infinite_) return false;
    return a.value_ <= b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : value_.get_str(); }

 private:
  Cardinality() = default;
  bool infinite_ = false;
  Integer value_{0};
};

/// Number of pairwise disjoint images of T(p) among split tori.
///
/// 1, 2 or 4 on Sigma; infinite for irrational heights; otherwise 4p+2q-4 when
/// the billiard path hits a vertex, 4p+2q when x = p'/q, and 8p+4q otherwise
/// (y = p/q being the height of the normal form).
inline Cardinality toric_packing_number(const Point& p, const Scalar& alpha) {
  require_interior(p, alpha);
  shared_radicand({p.x, p.y, alpha});
  Normalized n = normalize(p);
  switch (n.tag.region) {
    case Region::Origin: return Cardinality(Integer(1));
    case Region::SigmaSegment:
    case Region::SigmaEnd: return Cardinality(Integer(2));
    case Region::SigmaDiagonal: return Cardinality(Integer(4));
    default: break;
  }
  const Scalar& y = n.point.y;
  if (!y.is_rational()) return Cardinality::infinite();
  Integer pp = y.rational_part().get_num();
  Integer q = y.rational_part().get_den();
  if (hits_corner(n.point)) return Cardinality(Integer(4 * pp + 2 * q - 4));
  const Scalar& x = n.point.x;
  if (x.is_rational() && Rational(x.rational_part() * Rational(q)).get_den() == 1)
    return Cardinality(Integer(4 * pp + 2 * q));
  return Cardinality(Integer(8 * pp + 4 * q));
}

/// Upper bound for the packing number of T(x, 0) from displaceability of its
/// images: the least integer k >= 2 with k > (1+|x|)/(1-|x|). None when |x| >= 1.
inline std::optional<Integer> ps_upper_bound(const Scalar& x) {
  Scalar ax = abs(x);
  if (!(ax < Scalar(1))) return std::nullopt;
  Integer k = floor((Scalar(1) + ax) / (Scalar(1) - ax)) + 1;
  return k < 2 ? Integer(2) : k;
}

enum class KnownPackingSource { Nondisplaceable, InnerSegment, SmallAlphaBand, Irrational };

inline const char* source_name(KnownPackingSource s) {
  switch (s) {
    case KnownPackingSource::Nondisplaceable: return "nondisplaceable";
    case KnownPackingSource::InnerSegment: return "rigidity-bound+circle-packing";
    case KnownPackingSource::SmallAlphaBand: return "rigidity-bound+circle-packing,small-alpha";
    case KnownPackingSource::Irrational: return "irrational-r";
  }
  return "?";
}

struct KnownPacking {
  Cardinality value;
  KnownPackingSource source;
};

/// Packing numbers established in the literature for four families of points.
///
/// `small_alpha` asserts that alpha is small enough for the band rule (the
/// threshold depends on k and is not computed here).
inline std::optional<KnownPacking> known_packing_number(const Point& p, const Scalar& alpha,
                                                        bool small_alpha = false) {
  require_interior(p, alpha);
  shared_radicand({p.x, p.y, alpha});
  Scalar one(1);
  Scalar ax = abs(p.x);
  if (p.y.is_zero() && ax.is_zero()) return KnownPacking{Cardinality(Integer(1)), KnownPackingSource::Nondisplaceable};
  if (p.y.is_zero() && ax < Scalar::ratio(1, 3))
    return KnownPacking{Cardinality(Integer(2)), KnownPackingSource::InnerSegment};
  if (p.y.is_zero() && small_alpha && ax < one) {
    // |x| in ((k-2)/k, (k-1)/(k+1)) for some k >= 3; these intervals are disjoint.
    Integer k = floor(Scalar(2) / (one - ax));
    for (Integer c = k - 1; c <= k + 1; ++c) {
      if (c < 3) continue;
      Scalar lo(Rational(c - 2, c));
      Scalar hi(Rational(c - 1, c + 1));
      if (lo < ax && ax < hi) return KnownPacking{Cardinality(c), KnownPackingSource::SmallAlphaBand};
    }
  }
  if (!in_sigma(p) && !r_value(p).is_rational())
    return KnownPacking{Cardinality::infinite(), KnownPackingSource::Irrational};
  return std::nullopt;
}

struct PackingReport {
  Cardinality toric;
  std::optional<Integer> ps_bound;  ///< only for points with y = 0
  std::optional<KnownPacking> known;
};

inline PackingReport packing_report(const Point& p, const Scalar& alpha, bool small_alpha = false) {
  PackingReport r{toric_packing_number(p, alpha), std::nullopt, known_packing_number(p, alpha, small_alpha)};
  if (p.y.is_zero()) r.ps_bound = ps_upper_bound(p.x);
  return r;
}

enum class BallType { Clifford, Chekanov, NonMonotone };

inline const char* ball_type_name(BallType b) {
  switch (b) {
    case BallType::Clifford: return "clifford";
    case BallType::Chekanov: return "chekanov";
    case BallType::NonMonotone: return "nonmonotone";
  }
  return "?";
}

struct BallTypes {
  bool clifford = false;
  bool chekanov = false;
  bool nonmonotone = false;

  bool has(BallType b) const {
    return b == BallType::Clifford ? clifford : (b == BallType::Chekanov ? chekanov : nonmonotone);
  }
};

/// Whether p lies in the set of points y = +-1/k, x = j/k with j = k-1 (mod 2), |j| <= k-1.
inline bool in_monotone_ball_set(const Point& p) {
  if (p.y.is_zero() || !p.y.is_rational() || !p.x.is_rational()) return false;
  Rational inv = 1 / abs(Scalar(p.y)).rational_part();
  if (inv.get_den() != 1) return false;
  Integer k = inv.get_num();
  Rational jq = p.x.rational_part() * Rational(k);
  if (jq.get_den() != 1) return false;
  Integer j = jq.get_num();
  Integer jj = j < 0 ? Integer(-j) : j;
  return jj <= k - 1 && (j - k + 1) % 2 == 0;
}

/// Which model tori T(p) is Hamiltonian isotopic to, inside embedded balls.
inline BallTypes ball_type(const Point& p, const Scalar& alpha) {
  require_interior(p, alpha);
  shared_radicand({p.x, p.y, alpha});
  BallTypes b;
  bool sigma = in_sigma(p);
  b.clifford = sigma && !p.y.is_zero();
  if (!sigma) {
    b.chekanov = hits_corner(normalize(p).point);
    b.nonmonotone = !in_monotone_ball_set(p);
  }
  return b;
}

/// Base point of the Chekanov-type torus of size a in a ball of capacity 1 + alpha.
inline Point chekanov_image(const Scalar& a, const Scalar& alpha) {
  require_alpha(alpha);
  if (!(a.sign() > 0 && a < alpha)) throw DomainError("chekanov_image needs 0 < a < alpha");
  return {alpha - a - Scalar(1), alpha - a};
}

/// Base point of the product torus T(b, c) in a ball of capacity 1 + alpha.
inline Point product_image(const Scalar& b, const Scalar& c, const Scalar& alpha) {
  require_alpha(alpha);
  if (!(b.sign() > 0 && c.sign() > 0 && b + c < Scalar(2) * alpha))
    throw DomainError("product_image needs b, c > 0 and b + c < 2 alpha");
  return {b - alpha - Scalar(1), c - alpha};
}

/// Whether the Chekanov-type torus of size a is also a product torus: true
/// exactly when alpha - a is not 1/k for a positive integer k.
inline bool chek_nonmonotone_equiv(const Scalar& a, const Scalar& alpha) {
  chekanov_image(a, alpha);  // checks 0 < a < alpha
  Scalar t = alpha - a;
  if (!t.is_rational()) return true;
  Rational inv = 1 / t.rational_part();
  return inv.get_den() != 1;
}

}  // namespace splittori
