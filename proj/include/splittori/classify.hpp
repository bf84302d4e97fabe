#pragma once

/// @file classify.hpp
/// Hamiltonian equivalence of split tori and the Chekanov invariants.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "splittori/domain.hpp"

namespace splittori {

struct EquivalenceVerdict {
  bool equivalent;
  std::string reason;  ///< why the points differ; empty when equivalent
};

inline EquivalenceVerdict equivalent(const Point& p, const Point& q, const Scalar& alpha) {
  CanonicalForm a = canonicalize(p, alpha);
  CanonicalForm b = canonicalize(q, alpha);
  if (a == b) return {true, ""};
  if (a.is_sigma() != b.is_sigma()) return {false, "exactly one point lies in Sigma"};
  if (a.is_sigma()) return {false, "Sigma points with different |x| or |y|"};
  const auto& qa = std::get<CanonicalForm::QClass>(a.value);
  const auto& qb = std::get<CanonicalForm::QClass>(b.value);
  if (!(qa.y == qb.y)) return {false, "fundamental-domain heights differ"};
  return {false, "x-coordinates lie in different orbits"};
}

/// Subgroup of (Q(sqrt d), +) given by a reduced basis: elements (u + v sqrt d) / denom.
///
/// `rows` holds at most two integer pairs (v, u) in Hermite normal form.
struct GammaLattice {
  Integer denom{1};
  std::vector<std::pair<Integer, Integer>> rows;
  std::uint64_t radicand = 0;

  std::vector<Scalar> basis() const {
    std::vector<Scalar> out;
    for (const auto& [v, u] : rows)
      out.emplace_back(Rational(u, denom), Rational(v, denom), radicand);
    return out;
  }

  friend bool operator==(const GammaLattice& a, const GammaLattice& b) {
    if (a.rows.empty() && b.rows.empty()) return true;
    return a.basis() == b.basis();
  }
};

namespace detail {

inline GammaLattice make_gamma(const std::vector<Scalar>& gens) {
  GammaLattice g;
  std::vector<const Scalar*> nz;
  for (const auto& s : gens) {
    if (!s.is_zero()) nz.push_back(&s);
    if (s.radicand() != 0) g.radicand = s.radicand();
  }
  if (nz.empty()) return g;
  Integer den(1);
  for (const Scalar* s : nz) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s->rational_part().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s->surd_coefficient().get_den_mpz_t());
  }
  std::vector<std::pair<Integer, Integer>> m;
  for (const Scalar* s : nz) {
    Rational u = s->rational_part() * Rational(den);
    Rational v = s->surd_coefficient() * Rational(den);
    m.emplace_back(v.get_num(), u.get_num());
  }
  // Column 0 (surd part): Euclid on rows.
  for (;;) {
    std::size_t pivot = m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i].first != 0 && (pivot == m.size() || abs(m[i].first) < abs(m[pivot].first))) pivot = i;
    if (pivot == m.size()) break;
    bool reduced = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == pivot || m[i].first == 0) continue;
      Integer q = m[i].first / m[pivot].first;
      m[i].first -= q * m[pivot].first;
      m[i].second -= q * m[pivot].second;
      reduced = true;
    }
    if (!reduced) break;
  }
  std::pair<Integer, Integer> top{0, 0};
  Integer h(0);
  for (auto& row : m) {
    if (row.first != 0) {
      top = row;
      if (top.first < 0) top = {-top.first, -top.second};
    } else {
      mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), row.second.get_mpz_t());
    }
  }
  if (top.first != 0) {
    if (h != 0) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), top.second.get_mpz_t(), h.get_mpz_t());
      top.second = r;
    }
    g.rows.push_back(top);
  }
  if (h != 0) g.rows.emplace_back(Integer(0), h);
  g.denom = den;
  return g;
}

}  // namespace detail

/// Affine data of a point measured from the four facets of the rectangle.
struct ChekanovInvariants {
  std::array<Scalar, 4> ell;     ///< alpha - y, 1 + alpha - x, alpha + y, 1 + alpha + x
  Scalar d;                      ///< min ell_i
  std::vector<int> index_set;    ///< facets (1-based) realising the minimum
  GammaLattice gamma;            ///< subgroup generated by ell_i - d

  std::size_t count() const { return index_set.size(); }

  /// Invariants agree up to the facet relabelling induced by reflections.
  bool same_as(const ChekanovInvariants& o) const {
    return d == o.d && count() == o.count() && gamma == o.gamma;
  }
};

inline ChekanovInvariants chekanov_invariants(const Point& p, const Scalar& alpha) {
  require_interior(p, alpha);
  ChekanovInvariants c;
  Scalar one(1);
  c.ell = {alpha - p.y, one + alpha - p.x, alpha + p.y, one + alpha + p.x};
  c.d = *std::min_element(c.ell.begin(), c.ell.end());
  std::vector<Scalar> gens;
  for (int i = 0; i < 4; ++i) {
    if (c.ell[i] == c.d) c.index_set.push_back(i + 1);
    gens.push_back(c.ell[i] - c.d);
  }
  c.gamma = detail::make_gamma(gens);
  return c;
}

inline std::string format_gamma(const GammaLattice& g) {
  auto b = g.basis();
  if (b.empty()) return "0";
  std::string s = "<";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + format_scalar(b[i]);
  return s + ">";
}

}  // namespace splittori
