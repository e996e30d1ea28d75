#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qmcodes/cyclotomic.hpp"

namespace qm {

using Monomial = std::vector<std::uint32_t>;

/// Sparse polynomial in z_0..z_{num_vars-1} with Z[xi_p] coefficients.
///
/// Zero coefficients are never stored. Terms iterate in descending
/// lexicographic order of exponent vectors (z_0^n first).
class Enumerator {
public:
  struct DescendingLex {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
  };
  using Terms = std::map<Monomial, CyclotomicInt, DescendingLex>;

  Enumerator() = default;
  Enumerator(std::size_t num_vars, int order) : vars_(num_vars), p_(order) {}

  static Enumerator constant(std::size_t num_vars, int order, std::int64_t c);
  /// sum_s coeffs[s] z_s
  static Enumerator linear(const std::vector<CyclotomicInt>& coeffs);

  std::size_t num_vars() const { return vars_; }
  int order() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Monomial& m, const CyclotomicInt& c);

  Enumerator& operator+=(const Enumerator& o);
  friend Enumerator operator+(Enumerator a, const Enumerator& b) { return a += b; }
  friend Enumerator operator*(const Enumerator& a, const Enumerator& b);
  friend bool operator==(const Enumerator& a, const Enumerator& b) = default;

  /// Value at z_0 = ... = z_{num_vars-1} = 1.
  CyclotomicInt evaluate_at_ones() const;

  /// Replace z_t by sum_s rows[t][s] z_s, then divide exactly by scale_div.
  /// Throws ErrorCode::InexactDivision.
  Enumerator substitute(const std::vector<std::vector<CyclotomicInt>>& rows,
                        std::int64_t scale_div) const;

  /// Collapse variables through var_map (old index -> new index).
  Enumerator collapse(const std::vector<std::size_t>& var_map, std::size_t new_vars) const;

  /// Integer coefficients; throws ErrorCode::NotRational on the first irrational term.
  std::map<Monomial, std::int64_t, DescendingLex> integer_terms() const;

  /// "z0^2 + 8 z1^2"
  std::string to_string() const;

private:
  std::size_t vars_ = 0;
  int p_ = 0;
  Terms terms_;
};

/// Exponent t counts the entries of `classes` equal to t.
Monomial composition(const std::vector<std::size_t>& classes, std::size_t num_vars);

/// Substitution engine that memoizes the image of each monomial, so repeated
/// transforms under one kernel (e.g. a corpus of codes) share the expansion work.
class SubstitutionCache {
public:
  SubstitutionCache(std::vector<std::vector<CyclotomicInt>> rows);

  const std::vector<std::vector<CyclotomicInt>>& rows() const { return rows_; }
  /// Equivalent to W.substitute(rows(), scale_div).
  Enumerator apply(const Enumerator& w, std::int64_t scale_div);

private:
  const Enumerator& image(const Monomial& m);
  const Enumerator& power(std::size_t var, std::uint32_t k);

  std::vector<std::vector<CyclotomicInt>> rows_;
  std::map<Monomial, Enumerator> images_;
  std::map<std::pair<std::size_t, std::uint32_t>, Enumerator> powers_;
};

} // namespace qm
