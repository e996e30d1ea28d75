#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qm {

/// An exact element of Z[xi_p], xi_p = exp(2 pi sqrt(-1) / p), p an odd prime.
///
/// Stored in the power basis 1, xi, ..., xi^(p-2); xi^(p-1) is eliminated with
/// 1 + xi + ... + xi^(p-1) = 0, so representations are unique and equality is
/// coefficient-wise.
class CyclotomicInt {
public:
  CyclotomicInt() = default;
  /// The rational integer `value` in Z[xi_p].
  CyclotomicInt(int order, std::int64_t value = 0);

  /// xi^e, exponent reduced mod p.
  static CyclotomicInt root(int order, std::int64_t e);
  /// Sum of c[t] * xi^t for t in [0, p); `c` may have length p or p - 1.
  static CyclotomicInt from_exponent_counts(int order, std::span<const std::int64_t> c);

  int order() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The integer value when rational, std::nullopt otherwise.
  std::optional<std::int64_t> as_integer() const;
  /// Like as_integer() but throws ErrorCode::NotRational naming the coefficients.
  std::int64_t to_integer() const;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(std::int64_t s);
  CyclotomicInt operator-() const;

  /// Exact division of every coefficient; ErrorCode::InexactDivision otherwise.
  CyclotomicInt divided_exactly(std::int64_t d) const;
  /// True when the element lies in d * Z[xi_p].
  bool divisible_by(std::int64_t d) const;

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator*(CyclotomicInt a, std::int64_t s) { return a *= s; }
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) = default;

  /// Human-readable form, e.g. "3", "-1 + 2 xi^2".
  std::string to_string() const;

private:
  void require_same_order(const CyclotomicInt& o) const;

  int p_ = 0;
  std::vector<std::int64_t> c_;
};

} // namespace qm
