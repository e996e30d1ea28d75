#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>

namespace qm {

/// A Lipschitz integer a0 + a1 i + a2 j + a3 k.
///
/// All arithmetic is exact and overflow-checked (qm::ErrorCode::Overflow).
/// Ordering is lexicographic on (a0, a1, a2, a3).
struct Quaternion {
  std::int64_t a0 = 0, a1 = 0, a2 = 0, a3 = 0;

  constexpr Quaternion() = default;
  constexpr Quaternion(std::int64_t r) : a0(r) {}
  constexpr Quaternion(std::int64_t r, std::int64_t i, std::int64_t j, std::int64_t k)
      : a0(r), a1(i), a2(j), a3(k) {}

  static Quaternion from_array(const std::array<std::int64_t, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }
  std::array<std::int64_t, 4> to_array() const { return {a0, a1, a2, a3}; }

  bool is_zero() const { return a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0; }

  friend constexpr auto operator<=>(const Quaternion&, const Quaternion&) = default;

  Quaternion operator-() const;
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
};

Quaternion operator+(Quaternion x, const Quaternion& y);
Quaternion operator-(Quaternion x, const Quaternion& y);

/// Hamilton product: i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
Quaternion operator*(const Quaternion& x, const Quaternion& y);

Quaternion scale(std::int64_t s, const Quaternion& q);
Quaternion conjugate(const Quaternion& q);
std::int64_t norm(const Quaternion& q);

/// |a0| + |a1| + |a2| + |a3|
std::int64_t coord_weight(const Quaternion& q);

/// Orders by (coord_weight, lexicographic). This is the canonical-representative
/// order used throughout the residue ring.
bool weight_lex_less(const Quaternion& x, const Quaternion& y);

namespace units {
inline constexpr Quaternion one{1, 0, 0, 0};
inline constexpr Quaternion i{0, 1, 0, 0};
inline constexpr Quaternion j{0, 0, 1, 0};
inline constexpr Quaternion k{0, 0, 0, 1};
} // namespace units

/// The eight Lipschitz units in the fixed order (+1, -1, +i, -i, +j, -j, +k, -k).
inline constexpr std::array<Quaternion, 8> kUnits = {{
    {1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0},
    {0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1},
}};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace qm
