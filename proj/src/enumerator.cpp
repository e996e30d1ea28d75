#include "qmcodes/enumerator.hpp"

#include <sstream>

#include "qmcodes/checked.hpp"
#include "qmcodes/error.hpp"

namespace qm {

namespace {

std::string monomial_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] == 0)
      continue;
    if (!first)
      os << ' ';
    os << 'z' << s;
    if (m[s] > 1)
      os << '^' << m[s];
    first = false;
  }
  return os.str();
}

} // namespace

Enumerator Enumerator::constant(std::size_t num_vars, int order, std::int64_t c) {
  Enumerator e(num_vars, order);
  e.add_term(Monomial(num_vars, 0), CyclotomicInt(order, c));
  return e;
}

Enumerator Enumerator::linear(const std::vector<CyclotomicInt>& coeffs) {
  if (coeffs.empty())
    throw Error(ErrorCode::InvalidParams, "linear form needs at least one variable");
  Enumerator e(coeffs.size(), coeffs.front().order());
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    Monomial m(coeffs.size(), 0);
    m[s] = 1;
    e.add_term(m, coeffs[s]);
  }
  return e;
}

void Enumerator::add_term(const Monomial& m, const CyclotomicInt& c) {
  if (m.size() != vars_)
    throw Error(ErrorCode::InvalidParams, "monomial has " + std::to_string(m.size()) +
                                              " exponents, expected " + std::to_string(vars_));
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Enumerator& Enumerator::operator+=(const Enumerator& o) {
  if (o.vars_ != vars_)
    throw Error(ErrorCode::InvalidParams, "enumerators have different variable counts");
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Enumerator operator*(const Enumerator& a, const Enumerator& b) {
  if (a.vars_ != b.vars_)
    throw Error(ErrorCode::InvalidParams, "enumerators have different variable counts");
  Enumerator r(a.vars_, a.p_ ? a.p_ : b.p_);
  Monomial m(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t s = 0; s < m.size(); ++s)
        m[s] = ma[s] + mb[s];
      r.add_term(m, ca * cb);
    }
  return r;
}

CyclotomicInt Enumerator::evaluate_at_ones() const {
  CyclotomicInt sum(p_, 0);
  for (const auto& [m, c] : terms_)
    sum += c;
  return sum;
}

Enumerator Enumerator::substitute(const std::vector<std::vector<CyclotomicInt>>& rows,
                                  std::int64_t scale_div) const {
  SubstitutionCache cache(rows);
  return cache.apply(*this, scale_div);
}

Enumerator Enumerator::collapse(const std::vector<std::size_t>& var_map, std::size_t new_vars) const {
  if (var_map.size() != vars_)
    throw Error(ErrorCode::InvalidParams, "collapse map has wrong length");
  Enumerator r(new_vars, p_);
  for (const auto& [m, c] : terms_) {
    Monomial mm(new_vars, 0);
    for (std::size_t s = 0; s < vars_; ++s)
      mm.at(var_map[s]) += m[s];
    r.add_term(mm, c);
  }
  return r;
}

std::map<Monomial, std::int64_t, Enumerator::DescendingLex> Enumerator::integer_terms() const {
  std::map<Monomial, std::int64_t, DescendingLex> out;
  for (const auto& [m, c] : terms_) {
    auto v = c.as_integer();
    if (!v)
      throw Error(ErrorCode::NotRational, "coefficient of " + monomial_string(m) + " is " + c.to_string());
    out.emplace(m, *v);
  }
  return out;
}

std::string Enumerator::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const auto mono = monomial_string(m);
    if (auto v = c.as_integer()) {
      const bool negative = *v < 0;
      const auto mag = negative ? -*v : *v;
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      if (mag != 1 || mono.empty())
        os << mag << (mono.empty() ? "" : " ");
    } else {
      os << (first ? "" : " + ") << '(' << c.to_string() << ')' << (mono.empty() ? "" : " ");
    }
    os << mono;
    first = false;
  }
  return os.str();
}

Monomial composition(const std::vector<std::size_t>& classes, std::size_t num_vars) {
  Monomial m(num_vars, 0);
  for (auto t : classes) {
    if (t >= num_vars)
      throw Error(ErrorCode::UnknownResidue, "class index " + std::to_string(t) + " out of range");
    ++m[t];
  }
  return m;
}

SubstitutionCache::SubstitutionCache(std::vector<std::vector<CyclotomicInt>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_)
    if (row.size() != rows_.size())
      throw Error(ErrorCode::InvalidParams, "substitution matrix must be square");
}

const Enumerator& SubstitutionCache::power(std::size_t var, std::uint32_t k) {
  auto key = std::pair{var, k};
  if (auto it = powers_.find(key); it != powers_.end())
    return it->second;
  const int order = rows_.front().front().order();
  Enumerator e = k == 0 ? Enumerator::constant(rows_.size(), order, 1)
                        : power(var, k - 1) * Enumerator::linear(rows_[var]);
  return powers_.emplace(key, std::move(e)).first->second;
}

const Enumerator& SubstitutionCache::image(const Monomial& m) {
  if (auto it = images_.find(m); it != images_.end())
    return it->second;
  // Peel off the last variable with a positive exponent and reuse the image of the rest.
  std::size_t last = m.size();
  for (std::size_t s = m.size(); s-- > 0;)
    if (m[s] != 0) {
      last = s;
      break;
    }
  Enumerator e;
  if (last == m.size()) {
    e = Enumerator::constant(rows_.size(), rows_.front().front().order(), 1);
  } else {
    Monomial rest = m;
    rest[last] = 0;
    e = image(rest) * power(last, m[last]);
  }
  return images_.emplace(m, std::move(e)).first->second;
}

Enumerator SubstitutionCache::apply(const Enumerator& w, std::int64_t scale_div) {
  if (w.num_vars() != rows_.size())
    throw Error(ErrorCode::InvalidParams, "substitution matrix is " + std::to_string(rows_.size()) +
                                              " square but the enumerator has " +
                                              std::to_string(w.num_vars()) + " variables");
  if (scale_div <= 0)
    throw Error(ErrorCode::InvalidParams, "scale divisor must be positive");
  const int order = rows_.front().front().order();
  Enumerator sum(w.num_vars(), order);
  for (const auto& [m, c] : w.terms()) {
    const auto& img = image(m);
    for (const auto& [mm, cc] : img.terms())
      sum.add_term(mm, cc * c);
  }
  Enumerator out(w.num_vars(), order);
  for (const auto& [m, c] : sum.terms())
    out.add_term(m, c.divided_exactly(scale_div));
  return out;
}

} // namespace qm
