#pragma once

/// @file monodromy.hpp
/// Hamiltonian monodromy groups of split tori acting on H_1 = Z^2.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "splittori/probes.hpp"

namespace splittori {

enum class MonodromyCase { Mon1_5, Mon1, Mon3, Mon2, Mon5, Mon4, Mon4_5, Mon6, Mon7, Mon8 };

inline const char* case_name(MonodromyCase c) {
  switch (c) {
    case MonodromyCase::Mon1_5: return "mon1.5";
    case MonodromyCase::Mon1: return "mon1";
    case MonodromyCase::Mon3: return "mon3";
    case MonodromyCase::Mon2: return "mon2";
    case MonodromyCase::Mon5: return "mon5";
    case MonodromyCase::Mon4: return "mon4";
    case MonodromyCase::Mon4_5: return "mon4.5";
    case MonodromyCase::Mon6: return "mon6";
    case MonodromyCase::Mon7: return "mon7";
    case MonodromyCase::Mon8: return "mon8";
  }
  return "?";
}

enum class IsoType { Trivial, Z2, Z, Z_rtimes_Z2, Z2_ltimes_Z, Z2_ltimes_Z_rtimes_Z2 };

inline const char* iso_name(IsoType t) {
  switch (t) {
    case IsoType::Trivial: return "Trivial";
    case IsoType::Z2: return "Z2";
    case IsoType::Z: return "Z";
    case IsoType::Z_rtimes_Z2: return "Z_rtimes_Z2";
    case IsoType::Z2_ltimes_Z: return "Z2_ltimes_Z";
    case IsoType::Z2_ltimes_Z_rtimes_Z2: return "Z2_ltimes_Z_rtimes_Z2";
  }
  return "?";
}

enum class Exactness { Exact, UpperBound };

inline const char* exactness_name(Exactness e) { return e == Exactness::Exact ? "Exact" : "UpperBound"; }

/// Closed-form description of a group in the basis of the normalized torus.
struct MonodromyFamily {
  MonodromyCase tag = MonodromyCase::Mon5;
  std::int64_t q = 0;   ///< denominator of y (rational cases)
  std::int64_t m2 = 0;  ///< minimal m2 >= 0 with p' = m1 q + m2 p (rational cases)
  std::int64_t k2 = 0;  ///< x = k1 + k2 y (irrational cases)

  bool contains(const IntMatrix2& m) const {
    auto even = [](std::int64_t v) { return v % 2 == 0; };
    auto pm1 = [](std::int64_t v) { return v == 1 || v == -1; };
    switch (tag) {
      case MonodromyCase::Mon1_5: return m.b == 0 && pm1(m.a) && pm1(m.d) && even(m.c);
      case MonodromyCase::Mon1: return m.b == 0 && m.a == 1 && pm1(m.d) && even(m.c);
      case MonodromyCase::Mon3: return m.b == 0 && m.c == 0 && m.a == 1 && pm1(m.d);
      case MonodromyCase::Mon2: return m == IntMatrix2::identity() || m == IntMatrix2::swap();
      case MonodromyCase::Mon5: return m == IntMatrix2::identity();
      case MonodromyCase::Mon4:
      case MonodromyCase::Mon4_5:
        return m == IntMatrix2::identity() || m == IntMatrix2{-1, 0, 2 * k2, 1};
      case MonodromyCase::Mon6: return m.a == 1 && m.b == 0 && m.d == 1 && m.c % (2 * q) == 0;
      case MonodromyCase::Mon7:
      case MonodromyCase::Mon8: {
        if (m.b != 0 || m.d != 1 || !pm1(m.a)) return false;
        std::int64_t delta = m.a == -1 ? 1 : 0;
        return (m.c - 2 * delta * m2) % (2 * q) == 0;
      }
    }
    return false;
  }
};

struct MonodromyGroup {
  std::vector<IntMatrix2> generators;  ///< in the basis of H_1 of the input torus
  IsoType iso_type = IsoType::Trivial;
  Exactness exactness = Exactness::Exact;
  MonodromyCase case_tag = MonodromyCase::Mon5;
  /// Elements realised by probe loops; equals `generators` when exact.
  std::vector<IntMatrix2> lower_bound_generators;
  MonodromyFamily family;           ///< in the basis of the normalized torus
  IntMatrix2 conjugator;            ///< induced map from the input torus to the normalized torus
  Point normalized;                 ///< normal form of the input point
};

namespace detail {

inline std::int64_t to_int64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw DomainError(std::string(what) + " does not fit in 64 bits");
  return z.get_si();
}

inline MonodromyFamily classify_normalized(const Point& p0, Region region) {
  MonodromyFamily f;
  switch (region) {
    case Region::Origin: f.tag = MonodromyCase::Mon1_5; return f;
    case Region::SigmaSegment: f.tag = MonodromyCase::Mon1; return f;
    case Region::SigmaEnd: f.tag = MonodromyCase::Mon3; return f;
    case Region::SigmaDiagonal: f.tag = MonodromyCase::Mon2; return f;
    default: break;
  }
  const Scalar& x = p0.x;
  const Scalar& y = p0.y;
  if (!y.is_rational()) {
    Rational k2 = x.surd_coefficient() / y.surd_coefficient();
    Rational k1 = x.rational_part() - k2 * y.rational_part();
    if (k2.get_den() != 1 || k1.get_den() != 1) {
      f.tag = MonodromyCase::Mon5;
      return f;
    }
    f.k2 = to_int64(k2.get_num(), "k2");
    bool both_odd = k1.get_num() % 2 != 0 && k2.get_num() % 2 != 0;
    f.tag = both_odd ? MonodromyCase::Mon4_5 : MonodromyCase::Mon4;
    return f;
  }
  const Rational& yq = y.rational_part();
  f.q = to_int64(yq.get_den(), "q");
  if (!x.is_rational()) {
    f.tag = MonodromyCase::Mon6;
    return f;
  }
  Rational scaled = x.rational_part() * Rational(yq.get_den());
  if (scaled.get_den() != 1) {
    f.tag = MonodromyCase::Mon6;
    return f;
  }
  Integer pp = scaled.get_num();
  Integer m2(0);
  if (yq.get_den() > 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), yq.get_num_mpz_t(), yq.get_den_mpz_t());
    Integer prod = pp * inv;
    mpz_fdiv_r(m2.get_mpz_t(), prod.get_mpz_t(), yq.get_den_mpz_t());
  }
  f.m2 = to_int64(m2, "m2");
  Integer parity = pp - yq.get_num() - yq.get_den();
  f.tag = parity % 2 != 0 ? MonodromyCase::Mon7 : MonodromyCase::Mon8;
  return f;
}

inline std::vector<IntMatrix2> family_generators(const MonodromyFamily& f) {
  switch (f.tag) {
    case MonodromyCase::Mon1_5: return {{1, 0, 2, 1}, IntMatrix2::diag(1, -1), IntMatrix2::diag(-1, 1)};
    case MonodromyCase::Mon1: return {{1, 0, 2, 1}, IntMatrix2::diag(1, -1)};
    case MonodromyCase::Mon3: return {IntMatrix2::diag(1, -1)};
    case MonodromyCase::Mon2: return {IntMatrix2::swap()};
    case MonodromyCase::Mon5: return {};
    case MonodromyCase::Mon4:
    case MonodromyCase::Mon4_5: return {{-1, 0, 2 * f.k2, 1}};
    case MonodromyCase::Mon6: return {{1, 0, 2 * f.q, 1}};
    case MonodromyCase::Mon7:
    case MonodromyCase::Mon8: return {{1, 0, 2 * f.q, 1}, {-1, 0, 2 * f.m2, 1}};
  }
  return {};
}

inline IsoType family_iso(MonodromyCase c) {
  switch (c) {
    case MonodromyCase::Mon1_5: return IsoType::Z2_ltimes_Z_rtimes_Z2;
    case MonodromyCase::Mon1: return IsoType::Z2_ltimes_Z;
    case MonodromyCase::Mon3:
    case MonodromyCase::Mon2:
    case MonodromyCase::Mon4:
    case MonodromyCase::Mon4_5: return IsoType::Z2;
    case MonodromyCase::Mon5: return IsoType::Trivial;
    case MonodromyCase::Mon6: return IsoType::Z;
    case MonodromyCase::Mon7:
    case MonodromyCase::Mon8: return IsoType::Z_rtimes_Z2;
  }
  return IsoType::Trivial;
}

}  // namespace detail

/// Billiard steps searched for loops realising lower-bound elements. An
/// irrational orbit never closes, so the search must stop on its own.
inline constexpr std::uint64_t kLoopSearchSteps = 10'000;

/// Monodromy group of T(p) in the basis of H_1(T(p)).
///
/// The group of the normalized point is transported back along the probe path
/// that normalizes p. For the two open cases the result is an upper bound,
/// and `lower_bound_generators` lists elements realised by probe loops.
inline MonodromyGroup monodromy_group(const Point& p, const Scalar& alpha,
                                      std::uint64_t max_steps = kDefaultMaxSteps) {
  require_interior(p, alpha);
  shared_radicand({p.x, p.y, alpha});
  MonodromyGroup g;
  Normalized n = normalize(p);
  g.normalized = n.point;
  g.family = detail::classify_normalized(n.point, n.tag.region);
  g.case_tag = g.family.tag;
  g.iso_type = detail::family_iso(g.case_tag);
  g.exactness = (g.case_tag == MonodromyCase::Mon4_5 || g.case_tag == MonodromyCase::Mon8)
                    ? Exactness::UpperBound
                    : Exactness::Exact;
  g.conjugator = compose_monodromy(normalization_path(p, alpha));
  IntMatrix2 inv = g.conjugator.inverse();
  for (const IntMatrix2& m : detail::family_generators(g.family)) g.generators.push_back(inv * m * g.conjugator);
  if (g.exactness == Exactness::Exact) {
    g.lower_bound_generators = g.generators;
  } else {
    for (const auto& loop : probe_loops(p, alpha, std::min(max_steps, kLoopSearchSteps))) {
      IntMatrix2 m = compose_monodromy(loop);
      if (m == IntMatrix2::identity()) continue;
      if (std::find(g.lower_bound_generators.begin(), g.lower_bound_generators.end(), m) ==
          g.lower_bound_generators.end())
        g.lower_bound_generators.push_back(m);
    }
    std::sort(g.lower_bound_generators.begin(), g.lower_bound_generators.end());
  }
  return g;
}

/// Whether M belongs to the group. For upper-bound groups a true result means
/// M is consistent with the bound.
inline bool monodromy_membership(const IntMatrix2& m, const MonodromyGroup& g) {
  if (m.det() != 1 && m.det() != -1) return false;
  return g.family.contains(g.conjugator * m * g.conjugator.inverse());
}

}  // namespace splittori
