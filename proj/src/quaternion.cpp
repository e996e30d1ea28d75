#include "qmcodes/quaternion.hpp"

#include "qmcodes/checked.hpp"

namespace qm {

using checked::add;
using checked::mul;
using checked::sub;

Quaternion Quaternion::operator-() const {
  return {checked::neg(a0), checked::neg(a1), checked::neg(a2), checked::neg(a3)};
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  a0 = add(a0, o.a0);
  a1 = add(a1, o.a1);
  a2 = add(a2, o.a2);
  a3 = add(a3, o.a3);
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  a0 = sub(a0, o.a0);
  a1 = sub(a1, o.a1);
  a2 = sub(a2, o.a2);
  a3 = sub(a3, o.a3);
  return *this;
}

Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }

namespace {
std::int64_t dot4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                  std::int64_t e, std::int64_t f, std::int64_t g, std::int64_t h) {
  return add(add(mul(a, b), mul(c, d)), add(mul(e, f), mul(g, h)));
}
} // namespace

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return {
      dot4(x.a0, y.a0, checked::neg(x.a1), y.a1, checked::neg(x.a2), y.a2, checked::neg(x.a3), y.a3),
      dot4(x.a0, y.a1, x.a1, y.a0, x.a2, y.a3, checked::neg(x.a3), y.a2),
      dot4(x.a0, y.a2, checked::neg(x.a1), y.a3, x.a2, y.a0, x.a3, y.a1),
      dot4(x.a0, y.a3, x.a1, y.a2, checked::neg(x.a2), y.a1, x.a3, y.a0),
  };
}

Quaternion scale(std::int64_t s, const Quaternion& q) {
  return {mul(s, q.a0), mul(s, q.a1), mul(s, q.a2), mul(s, q.a3)};
}

Quaternion conjugate(const Quaternion& q) {
  return {q.a0, checked::neg(q.a1), checked::neg(q.a2), checked::neg(q.a3)};
}

std::int64_t norm(const Quaternion& q) { return dot4(q.a0, q.a0, q.a1, q.a1, q.a2, q.a2, q.a3, q.a3); }

std::int64_t coord_weight(const Quaternion& q) {
  return add(add(checked::abs(q.a0), checked::abs(q.a1)), add(checked::abs(q.a2), checked::abs(q.a3)));
}

bool weight_lex_less(const Quaternion& x, const Quaternion& y) {
  auto wx = coord_weight(x), wy = coord_weight(y);
  if (wx != wy)
    return wx < wy;
  return x < y;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.a0 << ',' << q.a1 << ',' << q.a2 << ',' << q.a3 << ']';
}

} // namespace qm
