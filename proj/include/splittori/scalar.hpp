#pragma once

/// @file scalar.hpp
/// Exact elements of Q(sqrt(d)) for a square-free radicand d.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "splittori/error.hpp"

namespace splittori {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest radicand accepted; square-free reduction uses trial division.
inline constexpr std::uint64_t kMaxRadicand = 1'000'000'000'000ULL;

namespace detail {

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_rational(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer isqrt(const Integer& n) {
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

/// Splits d = s^2 * f with f square-free; returns {s, f}.
inline std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t d) {
  std::uint64_t s = 1;
  std::uint64_t f = 1;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= d;
  return {s, f};
}

}  // namespace detail

/// u + v*sqrt(d) with u, v rational and d square-free.
///
/// Canonical form: d == 0 exactly when v == 0, and d >= 2 otherwise.
/// Binary operations between two irrational values require equal radicands.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : u_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(int n) : u_(n) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational u) : u_(std::move(u)) { u_.canonicalize(); }  // NOLINT
  Scalar(Rational u, Rational v, std::uint64_t d) : u_(std::move(u)), v_(std::move(v)) {
    u_.canonicalize();
    v_.canonicalize();
    if (v_ == 0 || d == 0) {
      v_ = 0;
      return;
    }
    if (d > kMaxRadicand) throw DomainError("radicand too large: " + std::to_string(d));
    auto [s, f] = detail::square_free_split(d);
    v_ *= Rational(static_cast<unsigned long>(s));
    if (f == 1) {
      u_ += v_;
      v_ = 0;
      return;
    }
    d_ = f;
  }

  static Scalar ratio(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    return Scalar(detail::make_rational(Integer(num), Integer(den)));
  }

  const Rational& rational_part() const { return u_; }
  const Rational& surd_coefficient() const { return v_; }
  std::uint64_t radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && u_ == 0; }
  bool is_integer() const { return is_rational() && u_.get_den() == 1; }

  /// Rational value; throws if irrational.
  const Rational& as_rational() const {
    if (!is_rational()) throw DomainError("expected a rational value");
    return u_;
  }

  /// -1, 0 or +1, decided exactly.
  int sign() const {
    const int su = sgn(u_);
    const int sv = sgn(v_);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    Rational uu = u_ * u_;
    Rational vv = v_ * v_ * Rational(static_cast<unsigned long>(d_));
    return uu > vv ? su : sv;  // uu == vv is impossible for irrational sqrt(d)
  }

  Scalar conjugate() const { return make(u_, -v_, d_); }

  /// (u + v sqrt d)(u - v sqrt d), always rational.
  Rational norm() const {
    return u_ * u_ - v_ * v_ * Rational(static_cast<unsigned long>(d_));
  }

  Integer floor() const {
    if (is_rational()) return detail::floor_rational(u_);
    Rational t = v_ * v_ * Rational(static_cast<unsigned long>(d_));
    Integer root = detail::isqrt(detail::floor_rational(t));  // floor(|v| sqrt d)
    Integer g = v_ > 0 ? root : Integer(-root - 1);
    Integer c = detail::floor_rational(u_) + g;
    while (Scalar(Rational(c + 1)) <= *this) c += 1;
    while (Scalar(Rational(c)) > *this) c -= 1;
    return c;
  }

  double to_double() const {
    return u_.get_d() + v_.get_d() * std::sqrt(static_cast<double>(d_));
  }

  Scalar operator-() const { return make(-u_, -v_, d_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return make(a.u_ + b.u_, a.v_ + b.v_, common_radicand(a, b));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return make(a.u_ - b.u_, a.v_ - b.v_, common_radicand(a, b));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    std::uint64_t d = common_radicand(a, b);
    Rational dd(static_cast<unsigned long>(d));
    return make(a.u_ * b.u_ + a.v_ * b.v_ * dd, a.u_ * b.v_ + a.v_ * b.u_, d);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (b.is_rational()) return make(a.u_ / b.u_, a.v_ / b.u_, a.d_);
    Scalar num = a * b.conjugate();
    Rational n = b.norm();
    return make(num.u_ / n, num.v_ / n, num.d_);
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.d_ == b.d_ && a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) {
      int c = cmp(a.u_, b.u_);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static Scalar make(Rational u, Rational v, std::uint64_t d) {
    Scalar s;
    s.u_ = std::move(u);
    if (v != 0 && d != 0) {
      s.v_ = std::move(v);
      s.d_ = d;
    }
    return s;
  }

  static std::uint64_t common_radicand(const Scalar& a, const Scalar& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
    throw DomainError("mixed radicands sqrt(" + std::to_string(a.d_) + ") and sqrt(" +
                      std::to_string(b.d_) + ")");
  }

  Rational u_{0};
  Rational v_{0};
  std::uint64_t d_ = 0;
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
inline Integer floor(const Scalar& s) { return s.floor(); }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// x - m*floor(x/m), in [0, m) for m > 0.
inline Scalar mod(const Scalar& x, const Scalar& m) {
  return x - m * Scalar(Rational(floor(x / m)));
}

/// Radicand shared by the arguments (0 if all are rational); throws on a mismatch.
inline std::uint64_t shared_radicand(std::initializer_list<std::reference_wrapper<const Scalar>> xs) {
  std::uint64_t d = 0;
  for (const Scalar& x : xs) {
    if (x.radicand() == 0) continue;
    if (d != 0 && d != x.radicand()) throw DomainError("mixed radicands");
    d = x.radicand();
  }
  return d;
}

inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// "p", "p/q", "u+v*sqrt(d)" or "u-w*sqrt(d)" (w = |v|); u is omitted when zero.
inline std::string format_scalar(const Scalar& s) {
  if (s.is_rational()) return format_rational(s.rational_part());
  std::string surd = format_rational(abs(Scalar(s.surd_coefficient())).rational_part()) +
                     "*sqrt(" + std::to_string(s.radicand()) + ")";
  bool neg = s.surd_coefficient() < 0;
  if (s.rational_part() == 0) return (neg ? "-" : "") + surd;
  return format_rational(s.rational_part()) + (neg ? "-" : "+") + surd;
}

namespace detail {

class ScalarLexer {
 public:
  explicit ScalarLexer(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Scalar parse() {
    if (s_.empty()) fail("empty scalar");
    Rational first = rational(true);
    Rational surd(0);
    std::uint64_t d = 0;
    if (s_.compare(pos_, 6, "*sqrt(") == 0) {
      surd = first;
      first = 0;
      expect("*sqrt(");
      d = radicand();
      expect(")");
    } else if (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+') {
        ++pos_;
      } else if (s_[pos_] == '-') {
        sign = -1;
        ++pos_;
      } else {
        fail("unexpected character");
      }
      surd = rational(false) * sign;
      expect("*sqrt(");
      d = radicand();
      expect(")");
    }
    if (pos_ != s_.size()) fail("trailing characters");
    return Scalar(first, surd, d);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse scalar '" + s_ + "': " + why);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Rational rational(bool allow_minus) {
    bool neg = false;
    if (allow_minus && pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    Integer num(digits());
    Integer den(1);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      den = Integer(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational q = make_rational(num, den);
    return neg ? Rational(-q) : q;
  }

  std::uint64_t radicand() {
    std::string ds = digits();
    if (ds.size() > 13) fail("radicand too large");
    std::uint64_t d = std::stoull(ds);
    if (d == 0) fail("radicand must be positive");
    if (d > kMaxRadicand) fail("radicand too large");
    return d;
  }

  void expect(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) != 0) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `["-"] int ["/" int] [("+"|"-") rat "*sqrt(" int ")"]`, or a bare
/// `["-"] rat "*sqrt(" int ")"`. Whitespace is ignored.
inline Scalar parse_scalar(std::string_view text) { return detail::ScalarLexer(text).parse(); }

}  // namespace splittori

template <>
struct std::hash<splittori::Scalar> {
  std::size_t operator()(const splittori::Scalar& s) const noexcept {
    return std::hash<std::string>{}(splittori::format_scalar(s));
  }
};
