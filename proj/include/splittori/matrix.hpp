#pragma once

/// @file matrix.hpp
/// Integer 2x2 matrices acting on first homology of a torus.

#include <cstdint>
#include <string>

#include "splittori/error.hpp"

namespace splittori {

/// [[a, b], [c, d]] acting on column vectors.
struct IntMatrix2 {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  static IntMatrix2 identity() { return {}; }
  static IntMatrix2 swap() { return {0, 1, 1, 0}; }
  static IntMatrix2 diag(std::int64_t x, std::int64_t y) { return {x, 0, 0, y}; }

  std::int64_t det() const { return a * d - b * c; }

  /// Inverse of a unimodular matrix.
  IntMatrix2 inverse() const {
    std::int64_t dt = det();
    if (dt != 1 && dt != -1) throw DomainError("matrix is not unimodular");
    return {d * dt, -b * dt, -c * dt, a * dt};
  }

  friend IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend IntMatrix2 operator-(const IntMatrix2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
  friend auto operator<=>(const IntMatrix2&, const IntMatrix2&) = default;
};

inline std::string format_matrix(const IntMatrix2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

}  // namespace splittori
