#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qmcodes/cyclotomic.hpp"
#include "qmcodes/galois_field.hpp"
#include "qmcodes/residue_ring.hpp"

namespace qm {

/// Additive bijection phi: GF(p^2) -> H[Z]_pi with phi(a + b alpha) = reduce(a + b u),
/// the character psi = chi_1 o phi^{-1} it induces on residues, and the bilinear
/// pairing used for duality.
///
/// The pairing <x, y> in Z/p is the coordinate of pi conj(x) y conj(pi) mod p along
/// the one-dimensional space pi H conj(pi) mod p. It is well defined on classes,
/// bi-additive, alternating and invariant under simultaneous left multiplication
/// by a unit. Its scale is fixed so that <u, y> equals psi's exponent of y.
class Correspondence {
public:
  /// u is the first of reduce(i), reduce(j), reduce(k) whose span with 1 covers all
  /// p^2 classes, or reduce(*alpha_image) when given. Throws
  /// ErrorCode::NoIndependentUnit when no candidate (or the override) spans.
  static std::shared_ptr<const Correspondence> build(
      const FieldSpec& field, std::shared_ptr<const ResidueRing> ring,
      std::optional<Quaternion> alpha_image = std::nullopt);

  const FieldSpec& field() const { return field_; }
  const ResidueRing& ring() const { return *ring_; }
  const std::shared_ptr<const ResidueRing>& ring_ptr() const { return ring_; }

  /// The residue image of alpha.
  ResidueIndex alpha_image() const { return u_; }

  ResidueIndex to_ring(std::size_t field_index) const { return to_ring_[field_index]; }
  std::size_t to_field(ResidueIndex r) const { return to_field_[r]; }

  /// Exponent e of psi(r) = xi^e.
  std::int64_t psi_exponent(ResidueIndex r) const {
    return field_.constant_coeff(to_field_[r]);
  }
  CyclotomicInt psi(ResidueIndex r) const;

  /// <x, y> in [0, p).
  std::int64_t pairing(ResidueIndex x, ResidueIndex y) const {
    return pairing_[x * ring_->size() + y];
  }

private:
  Correspondence(FieldSpec field, std::shared_ptr<const ResidueRing> ring)
      : field_(std::move(field)), ring_(std::move(ring)) {}

  void build_pairing();

  FieldSpec field_;
  std::shared_ptr<const ResidueRing> ring_;
  ResidueIndex u_ = 0;
  std::vector<ResidueIndex> to_ring_;
  std::vector<std::size_t> to_field_;
  std::vector<std::uint8_t> pairing_;
};

} // namespace qm
