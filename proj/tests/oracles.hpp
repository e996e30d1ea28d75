#pragma once
// Test-side reference implementations. Deliberately naive and independent of
// the library's tables; only qm::Quaternion is shared as a value type.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "qmcodes/cyclotomic.hpp"
#include "qmcodes/quaternion.hpp"

namespace oracle {

using qm::Quaternion;
using Vec4 = std::array<std::int64_t, 4>;

// x * y as L(x) y with the left-multiplication matrix of x.
inline Quaternion matrix_mul(const Quaternion& x, const Quaternion& y) {
  const std::int64_t a = x.a0, b = x.a1, c = x.a2, d = x.a3;
  const std::int64_t L[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
  const Vec4 v = y.to_array();
  Vec4 out{};
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      out[r] += L[r][s] * v[s];
  return Quaternion::from_array(out);
}

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline Vec4 mod4(const Quaternion& q, std::int64_t p) {
  return {mod(q.a0, p), mod(q.a1, p), mod(q.a2, p), mod(q.a3, p)};
}

inline Quaternion conj(const Quaternion& q) { return {q.a0, -q.a1, -q.a2, -q.a3}; }

inline std::int64_t weight(const Quaternion& q) {
  return std::abs(q.a0) + std::abs(q.a1) + std::abs(q.a2) + std::abs(q.a3);
}

inline bool weight_lex(const Quaternion& x, const Quaternion& y) {
  const auto wx = weight(x), wy = weight(y);
  return wx != wy ? wx < wy : x < y;
}

// x and y share a class mod H pi iff (x - y) conj(pi) lies in pH, so
// x conj(pi) mod p is a complete class invariant.
inline Vec4 class_key(const Quaternion& x, const Quaternion& pi, std::int64_t p) {
  return mod4(matrix_mul(x, conj(pi)), p);
}

// Minimum (weight, lex) member of every class, found by scanning the box
// [-2p, 2p]^4. Every class has a member with coordinates in (-p/2, p/2], hence of
// weight at most 2p, and the box contains every quaternion of weight <= 2p.
inline std::map<Vec4, Quaternion> canonical_reps(const Quaternion& pi, std::int64_t p) {
  std::map<Vec4, Quaternion> best;
  const std::int64_t r = 2 * p;
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b)
      for (std::int64_t c = -r; c <= r; ++c)
        for (std::int64_t d = -r; d <= r; ++d) {
          const Quaternion q{a, b, c, d};
          if (weight(q) > r)
            continue;
          auto key = class_key(q, pi, p);
          auto it = best.find(key);
          if (it == best.end())
            best.emplace(key, q);
          else if (weight_lex(q, it->second))
            it->second = q;
        }
  return best;
}

// pi conj(x) y conj(pi) mod p. For every x, y this lies on one line through 0
// in (Z/p)^4, so a sum of such values vanishes iff the scalar form does.
inline Vec4 sandwich(const Quaternion& x, const Quaternion& y, const Quaternion& pi, std::int64_t p) {
  return mod4(matrix_mul(matrix_mul(matrix_mul(pi, conj(x)), y), conj(pi)), p);
}

inline std::complex<double> numeric(const qm::CyclotomicInt& c) {
  std::complex<double> z = 0;
  const double p = c.order();
  for (std::size_t e = 0; e < c.coeffs().size(); ++e)
    z += static_cast<double>(c.coeffs()[e]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / p);
  return z;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace oracle
