#include "qmcodes/galois_field.hpp"

#include <string>

#include "qmcodes/checked.hpp"
#include "qmcodes/error.hpp"

namespace qm {

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace {

constexpr std::int64_t kMaxFieldSize = 1'000'000;

// Multiplies the element `x` (dense index) by the indeterminate modulo the monic
// polynomial `poly`.
std::size_t times_x(std::size_t x, std::int64_t p, int m, const std::vector<std::int64_t>& poly) {
  std::vector<std::int64_t> g(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    g[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(x % static_cast<std::size_t>(p));
    x /= static_cast<std::size_t>(p);
  }
  const std::int64_t lead = g[static_cast<std::size_t>(m - 1)];
  for (int t = m - 1; t > 0; --t)
    g[static_cast<std::size_t>(t)] = g[static_cast<std::size_t>(t - 1)];
  g[0] = 0;
  for (int t = 0; t < m; ++t)
    g[static_cast<std::size_t>(t)] =
        checked::mod(g[static_cast<std::size_t>(t)] - lead * poly[static_cast<std::size_t>(t)], p);
  std::size_t r = 0;
  for (int t = m - 1; t >= 0; --t)
    r = r * static_cast<std::size_t>(p) + static_cast<std::size_t>(g[static_cast<std::size_t>(t)]);
  return r;
}

// Powers of x from x^0 until it returns to 1; empty if x is not a unit of order q - 1.
std::vector<std::size_t> cyclic_powers(std::int64_t p, int m, std::int64_t q,
                                       const std::vector<std::int64_t>& poly) {
  std::vector<std::size_t> pw;
  pw.reserve(static_cast<std::size_t>(q - 1));
  std::size_t cur = 1;
  for (std::int64_t e = 0; e < q - 1; ++e) {
    if (e > 0 && cur == 1)
      return {};
    if (cur == 0)
      return {};
    pw.push_back(cur);
    cur = times_x(cur, p, m, poly);
  }
  if (cur != 1)
    return {};
  return pw;
}

} // namespace

FieldSpec FieldSpec::make(std::int64_t p, int m, std::optional<std::vector<std::int64_t>> poly) {
  if (p == 2 || !is_prime(p))
    throw Error(ErrorCode::InvalidParams, "field characteristic must be an odd prime, got " + std::to_string(p));
  if (m < 1)
    throw Error(ErrorCode::InvalidParams, "extension degree must be at least 1");
  std::int64_t q = 1;
  for (int t = 0; t < m; ++t) {
    q = checked::mul(q, p);
    if (q > kMaxFieldSize)
      throw Error(ErrorCode::InvalidParams, "field size exceeds 10^6");
  }

  FieldSpec f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = q;

  if (poly) {
    if (poly->size() != static_cast<std::size_t>(m + 1) || poly->back() != 1)
      throw Error(ErrorCode::InvalidParams, "primitive_poly must be monic of degree m, constant term first");
    for (auto c : *poly)
      if (c < 0 || c >= p)
        throw Error(ErrorCode::InvalidParams, "primitive_poly coefficients must lie in [0, p)");
    f.poly_ = *poly;
    f.exp_table_ = cyclic_powers(p, m, q, f.poly_);
    if (f.exp_table_.empty())
      throw Error(ErrorCode::InvalidParams, "primitive_poly is not primitive");
  } else if (m == 1) {
    // Degenerate prime field: alpha is the smallest primitive root, poly = x - alpha.
    for (std::int64_t g = 1; g < p && f.exp_table_.empty(); ++g) {
      f.poly_ = {checked::mod(-g, p), 1};
      f.exp_table_ = cyclic_powers(p, m, q, f.poly_);
    }
  } else {
    // Lexicographic search over (c_0, ..., c_{m-1}), c_0 most significant.
    std::int64_t tuples = q;
    for (std::int64_t code = 0; code < tuples && f.exp_table_.empty(); ++code) {
      std::vector<std::int64_t> cand(static_cast<std::size_t>(m + 1), 0);
      std::int64_t rest = code;
      for (int t = m - 1; t >= 0; --t) {
        cand[static_cast<std::size_t>(t)] = rest % p;
        rest /= p;
      }
      cand[static_cast<std::size_t>(m)] = 1;
      f.poly_ = cand;
      f.exp_table_ = cyclic_powers(p, m, q, f.poly_);
    }
  }
  if (f.exp_table_.empty())
    throw Error(ErrorCode::InvalidParams, "no primitive polynomial found");

  f.log_table_.assign(static_cast<std::size_t>(q), -1);
  for (std::size_t e = 0; e < f.exp_table_.size(); ++e)
    f.log_table_[f.exp_table_[e]] = static_cast<std::int64_t>(e);
  return f;
}

FieldElem FieldSpec::element(std::size_t index) const {
  FieldElem e;
  e.coeffs.resize(static_cast<std::size_t>(m_));
  for (auto& c : e.coeffs) {
    c = static_cast<std::int64_t>(index % static_cast<std::size_t>(p_));
    index /= static_cast<std::size_t>(p_);
  }
  return e;
}

std::size_t FieldSpec::index_of(const FieldElem& e) const {
  if (e.coeffs.size() != static_cast<std::size_t>(m_))
    throw Error(ErrorCode::InvalidParams, "field element has wrong length");
  std::size_t r = 0;
  for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it)
    r = r * static_cast<std::size_t>(p_) + static_cast<std::size_t>(checked::mod(*it, p_));
  return r;
}

FieldElem FieldSpec::alpha() const { return element(exp_table_.size() > 1 ? exp_table_[1] : exp_table_[0]); }

std::size_t FieldSpec::add(std::size_t x, std::size_t y) const {
  std::size_t r = 0, scale = 1;
  const auto p = static_cast<std::size_t>(p_);
  for (int t = 0; t < m_; ++t) {
    r += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return r;
}

std::size_t FieldSpec::neg(std::size_t x) const {
  std::size_t r = 0, scale = 1;
  const auto p = static_cast<std::size_t>(p_);
  for (int t = 0; t < m_; ++t) {
    r += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return r;
}

std::size_t FieldSpec::mul(std::size_t x, std::size_t y) const {
  if (x == 0 || y == 0)
    return 0;
  const auto order = static_cast<std::int64_t>(q_ - 1);
  return exp_table_[static_cast<std::size_t>((log_table_[x] + log_table_[y]) % order)];
}

std::size_t FieldSpec::power_of_alpha(std::int64_t e) const {
  return exp_table_[static_cast<std::size_t>(checked::mod(e, q_ - 1))];
}

std::int64_t FieldSpec::log(std::size_t x) const {
  if (x == 0 || x >= log_table_.size())
    throw Error(ErrorCode::InvalidParams, "log of zero or out-of-range element");
  return log_table_[x];
}

FieldElem FieldSpec::add(const FieldElem& x, const FieldElem& y) const {
  return element(add(index_of(x), index_of(y)));
}

FieldElem FieldSpec::mul(const FieldElem& x, const FieldElem& y) const {
  return element(mul(index_of(x), index_of(y)));
}

CyclotomicInt FieldSpec::chi1(std::size_t index) const {
  return CyclotomicInt::root(static_cast<int>(p_), constant_coeff(index));
}

} // namespace qm
