#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qmcodes/cyclotomic.hpp"

namespace qm {

bool is_prime(std::int64_t n);

/// Element of GF(p^m): coordinates g_0..g_{m-1} in the basis 1, alpha, ..., alpha^(m-1),
/// each in [0, p).
struct FieldElem {
  std::vector<std::int64_t> coeffs;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// GF(p^m) over a monic primitive polynomial, with log/antilog tables.
///
/// Elements are also addressed by a dense index g_0 + g_1 p + ... + g_{m-1} p^(m-1),
/// so index 0 is zero and index 1 is one.
class FieldSpec {
public:
  /// Lexicographically smallest monic primitive polynomial of degree m
  /// (coefficient tuples compared from the constant term), or `poly` when
  /// given. `poly` is the full monic coefficient vector, constant term first.
  static FieldSpec make(std::int64_t p, int m,
                        std::optional<std::vector<std::int64_t>> poly = std::nullopt);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  std::int64_t q() const { return q_; }
  /// Monic, constant term first, length m + 1.
  const std::vector<std::int64_t>& primitive_poly() const { return poly_; }

  FieldElem element(std::size_t index) const;
  std::size_t index_of(const FieldElem& e) const;
  FieldElem alpha() const;

  std::size_t add(std::size_t x, std::size_t y) const;
  std::size_t neg(std::size_t x) const;
  std::size_t mul(std::size_t x, std::size_t y) const;
  /// alpha^e
  std::size_t power_of_alpha(std::int64_t e) const;
  /// Discrete log base alpha; x must be nonzero.
  std::int64_t log(std::size_t x) const;

  FieldElem add(const FieldElem& x, const FieldElem& y) const;
  FieldElem mul(const FieldElem& x, const FieldElem& y) const;

  /// g_0 of the element at `index`.
  std::int64_t constant_coeff(std::size_t index) const { return static_cast<std::int64_t>(index % p_); }

  /// chi_1(g) = xi^(g_0).
  CyclotomicInt chi1(std::size_t index) const;
  CyclotomicInt chi1(const FieldElem& e) const { return chi1(index_of(e)); }

private:
  std::int64_t p_ = 0;
  int m_ = 0;
  std::int64_t q_ = 0;
  std::vector<std::int64_t> poly_;
  std::vector<std::size_t> exp_table_;  // alpha^e for e in [0, q-1)
  std::vector<std::int64_t> log_table_; // -1 at index 0
};

} // namespace qm
