#include "qmcodes/cyclotomic.hpp"

#include <sstream>

#include "qmcodes/checked.hpp"
#include "qmcodes/error.hpp"

namespace qm {

namespace {

// Fold a length-p exponent-count vector into the power basis by subtracting the
// xi^(p-1) coefficient from every coordinate.
std::vector<std::int64_t> fold(std::vector<std::int64_t> full) {
  const std::int64_t top = full.back();
  full.pop_back();
  if (top != 0)
    for (auto& c : full)
      c = checked::sub(c, top);
  return full;
}

} // namespace

CyclotomicInt::CyclotomicInt(int order, std::int64_t value) : p_(order) {
  if (order < 2)
    throw Error(ErrorCode::InvalidParams, "cyclotomic order must be at least 2");
  c_.assign(static_cast<std::size_t>(order - 1), 0);
  c_[0] = value;
}

CyclotomicInt CyclotomicInt::root(int order, std::int64_t e) {
  CyclotomicInt r(order, 0);
  const auto k = checked::mod(e, order);
  if (k == order - 1) {
    for (auto& c : r.c_)
      c = -1;
  } else {
    r.c_[static_cast<std::size_t>(k)] = 1;
  }
  return r;
}

CyclotomicInt CyclotomicInt::from_exponent_counts(int order, std::span<const std::int64_t> c) {
  CyclotomicInt r(order, 0);
  if (c.size() == static_cast<std::size_t>(order)) {
    r.c_ = fold({c.begin(), c.end()});
  } else if (c.size() == static_cast<std::size_t>(order - 1)) {
    r.c_.assign(c.begin(), c.end());
  } else {
    throw Error(ErrorCode::InvalidParams, "coefficient vector length must be p or p-1");
  }
  return r;
}

bool CyclotomicInt::is_zero() const {
  for (auto c : c_)
    if (c != 0)
      return false;
  return true;
}

bool CyclotomicInt::is_rational() const {
  for (std::size_t t = 1; t < c_.size(); ++t)
    if (c_[t] != 0)
      return false;
  return true;
}

std::optional<std::int64_t> CyclotomicInt::as_integer() const {
  if (!is_rational())
    return std::nullopt;
  return c_.empty() ? 0 : c_[0];
}

std::int64_t CyclotomicInt::to_integer() const {
  if (auto v = as_integer())
    return *v;
  throw Error(ErrorCode::NotRational, to_string());
}

void CyclotomicInt::require_same_order(const CyclotomicInt& o) const {
  if (p_ != o.p_)
    throw Error(ErrorCode::MixedOrder,
                "operands in Z[xi_" + std::to_string(p_) + "] and Z[xi_" + std::to_string(o.p_) + "]");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  require_same_order(o);
  for (std::size_t t = 0; t < c_.size(); ++t)
    c_[t] = checked::add(c_[t], o.c_[t]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  require_same_order(o);
  for (std::size_t t = 0; t < c_.size(); ++t)
    c_[t] = checked::sub(c_[t], o.c_[t]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(std::int64_t s) {
  for (auto& c : c_)
    c = checked::mul(c, s);
  return *this;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& c : r.c_)
    c = checked::neg(c);
  return r;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  a.require_same_order(b);
  const auto p = static_cast<std::size_t>(a.p_);
  if (b.is_rational())
    return CyclotomicInt(a) *= b.c_[0];
  if (a.is_rational())
    return CyclotomicInt(b) *= a.c_[0];
  std::vector<std::int64_t> full(p, 0);
  for (std::size_t s = 0; s < a.c_.size(); ++s) {
    if (a.c_[s] == 0)
      continue;
    for (std::size_t t = 0; t < b.c_.size(); ++t) {
      if (b.c_[t] == 0)
        continue;
      auto& slot = full[(s + t) % p];
      slot = checked::add(slot, checked::mul(a.c_[s], b.c_[t]));
    }
  }
  CyclotomicInt r;
  r.p_ = a.p_;
  r.c_ = fold(std::move(full));
  return r;
}

bool CyclotomicInt::divisible_by(std::int64_t d) const {
  if (d == 0)
    return false;
  for (auto c : c_)
    if (c % d != 0)
      return false;
  return true;
}

CyclotomicInt CyclotomicInt::divided_exactly(std::int64_t d) const {
  if (!divisible_by(d))
    throw Error(ErrorCode::InexactDivision, to_string() + " by " + std::to_string(d));
  CyclotomicInt r = *this;
  for (auto& c : r.c_)
    c /= d;
  return r;
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < c_.size(); ++t) {
    auto c = c_[t];
    if (c == 0)
      continue;
    if (first) {
      if (c < 0)
        os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const auto mag = c < 0 ? -c : c;
    if (t == 0) {
      os << mag;
    } else {
      if (mag != 1)
        os << mag << ' ';
      os << "xi";
      if (t > 1)
        os << '^' << t;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

} // namespace qm
