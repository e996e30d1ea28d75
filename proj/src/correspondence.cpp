#include "qmcodes/correspondence.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "qmcodes/checked.hpp"
#include "qmcodes/error.hpp"

namespace qm {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = checked::mod(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const auto q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return checked::mod(s0, p);
}

std::array<std::int64_t, 4> mod_coords(const Quaternion& q, std::int64_t p) {
  return {checked::mod(q.a0, p), checked::mod(q.a1, p), checked::mod(q.a2, p), checked::mod(q.a3, p)};
}

} // namespace

std::shared_ptr<const Correspondence> Correspondence::build(const FieldSpec& field,
                                                            std::shared_ptr<const ResidueRing> ring,
                                                            std::optional<Quaternion> alpha_image) {
  if (field.m() != 2)
    throw Error(ErrorCode::InvalidParams, "correspondence needs GF(p^2)");
  if (field.p() != ring->p())
    throw Error(ErrorCode::InvalidParams, "field and ring have different characteristic");

  std::vector<Quaternion> candidates;
  if (alpha_image)
    candidates.push_back(ring->reduce(*alpha_image));
  else
    candidates = {ring->reduce(units::i), ring->reduce(units::j), ring->reduce(units::k)};

  std::shared_ptr<Correspondence> c(new Correspondence(field, ring));
  const auto p = ring->p();
  const auto n = ring->size();
  for (const auto& u : candidates) {
    std::vector<ResidueIndex> to_ring(n);
    std::vector<std::size_t> to_field(n, n);
    bool covers = true;
    for (std::int64_t b = 0; b < p && covers; ++b)
      for (std::int64_t a = 0; a < p && covers; ++a) {
        const auto idx = static_cast<std::size_t>(a + b * p);
        const auto r = ring->index_of(Quaternion(a) + scale(b, u));
        if (to_field[r] != n)
          covers = false;
        to_ring[idx] = r;
        to_field[r] = idx;
      }
    if (!covers)
      continue;
    c->u_ = ring->index_of(u);
    c->to_ring_ = std::move(to_ring);
    c->to_field_ = std::move(to_field);
    c->build_pairing();
    return c;
  }
  throw Error(ErrorCode::NoIndependentUnit,
              alpha_image ? "alpha_image is Z/p-dependent on 1 modulo pi"
                          : "none of i, j, k is Z/p-independent of 1 modulo pi");
}

CyclotomicInt Correspondence::psi(ResidueIndex r) const {
  return CyclotomicInt::root(static_cast<int>(field_.p()), psi_exponent(r));
}

void Correspondence::build_pairing() {
  const auto& ring = *ring_;
  const auto& pi = ring.modulus().pi;
  const auto& pi_conj = ring.modulus().pi_conj;
  const auto p = ring.p();
  const auto n = ring.size();

  // pi H conj(pi) mod p is one-dimensional; pick a spanning vector and a
  // coordinate where it is invertible.
  std::array<std::int64_t, 4> span{};
  bool found = false;
  for (const auto& e : {units::i, units::j, units::k}) {
    span = mod_coords(pi * e * pi_conj, p);
    if (span != std::array<std::int64_t, 4>{}) {
      found = true;
      break;
    }
  }
  if (!found)
    throw std::logic_error("pi H conj(pi) vanishes mod p");
  std::size_t axis = 0;
  while (span[axis] == 0)
    ++axis;
  const auto axis_inv = inverse_mod(span[axis], p);

  std::vector<std::int64_t> raw(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto left = pi * conjugate(ring.at(static_cast<ResidueIndex>(x)));
    for (std::size_t y = 0; y < n; ++y) {
      const auto t = mod_coords(left * ring.at(static_cast<ResidueIndex>(y)) * pi_conj, p);
      const auto v = checked::mod(t[axis] * axis_inv, p);
      for (std::size_t a = 0; a < 4; ++a)
        if (checked::mod(t[a] - v * span[a], p) != 0)
          throw std::logic_error("sandwich product left the line pi H conj(pi)");
      raw[x * n + y] = v;
    }
  }

  const auto one = ring.index_of(units::one);
  const auto beta = raw[u_ * n + one];
  if (beta == 0)
    throw std::logic_error("pairing of alpha image with 1 vanishes");
  const auto s = inverse_mod(beta, p);

  pairing_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    pairing_[i] = static_cast<std::uint8_t>(checked::mod(raw[i] * s, p));

  for (std::size_t y = 0; y < n; ++y)
    if (pairing(u_, static_cast<ResidueIndex>(y)) != psi_exponent(static_cast<ResidueIndex>(y)))
      throw std::logic_error("pairing with the alpha image does not reproduce psi");
}

} // namespace qm
