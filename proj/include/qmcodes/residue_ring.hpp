#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qmcodes/quaternion.hpp"

namespace qm {

using ResidueIndex = std::uint16_t;

/// A quaternion pi of odd prime norm p.
struct PrimeModulus {
  Quaternion pi;
  std::int64_t p = 0;
  Quaternion pi_conj;

  /// Throws ErrorCode::NonPrimeNorm unless norm(pi) is an odd prime.
  static PrimeModulus make(const Quaternion& pi);
};

/// H[Z]_pi: the p^2 classes of H[Z] modulo the left ideal H[Z] pi.
///
/// Residues are canonical representatives ordered by (coord_weight, lex); index 0
/// is zero. Addition, negation and left multiplication are tabulated on indices.
/// Left multiplication is well defined on classes of the right factor only, so
/// `mul(x, y)` means reduce(rep(x) * rep(y)) on the canonical representatives.
class ResidueRing {
public:
  /// Largest supported p^2 (tables are p^2 x p^2).
  static constexpr std::int64_t kMaxSize = 2048;

  static std::shared_ptr<const ResidueRing> make(const Quaternion& pi);

  const PrimeModulus& modulus() const { return mod_; }
  std::int64_t p() const { return mod_.p; }
  std::size_t size() const { return residues_.size(); }

  const std::vector<Quaternion>& residues() const { return residues_; }
  const Quaternion& at(ResidueIndex r) const { return residues_[r]; }

  /// Canonical representative of x + H[Z] pi: the (coord_weight, lex) minimum over
  /// x - q pi with each coordinate of q within one of round(x conj(pi) / p).
  Quaternion reduce(const Quaternion& x) const;
  /// Index of reduce(x).
  ResidueIndex index_of(const Quaternion& x) const;
  /// Index of x if x is already canonical.
  std::optional<ResidueIndex> find(const Quaternion& canonical) const;

  ResidueIndex add(ResidueIndex x, ResidueIndex y) const { return add_[x * size() + y]; }
  ResidueIndex neg(ResidueIndex x) const { return neg_[x]; }
  ResidueIndex sub(ResidueIndex x, ResidueIndex y) const { return add(x, neg(y)); }
  ResidueIndex mul(ResidueIndex x, ResidueIndex y) const { return mul_[x * size() + y]; }
  /// k * x for an integer k (repeated addition mod p).
  ResidueIndex scalar_mul(std::int64_t k, ResidueIndex x) const;

  std::int64_t qm_weight(ResidueIndex r) const { return weights_[r]; }
  std::int64_t qm_distance(const Quaternion& x, const Quaternion& y) const;

  /// { reduce(u r) : u in kUnits }, sorted by (weight, lex).
  std::vector<ResidueIndex> unit_orbit(ResidueIndex r) const;

private:
  explicit ResidueRing(PrimeModulus mod);

  PrimeModulus mod_;
  std::vector<Quaternion> residues_;
  std::map<Quaternion, ResidueIndex> index_;
  std::vector<std::int64_t> weights_;
  std::vector<ResidueIndex> add_;
  std::vector<ResidueIndex> neg_;
  std::vector<ResidueIndex> mul_;
};

std::int64_t qm_weight(const Quaternion& canonical);

/// Ordered unit-orbit partition of a residue ring: class 0 = {0}, classes 1..m are
/// the left unit orbits (8 elements each), m = (p^2 - 1) / 8.
struct WeightClassPartition {
  std::shared_ptr<const ResidueRing> ring;
  std::vector<std::vector<ResidueIndex>> classes;
  /// omega_t, the class representatives; reps[0] = 0, reps[1] = 1.
  std::vector<ResidueIndex> reps;
  /// residue index -> class index
  std::vector<std::size_t> class_of;

  /// Diagnostics: whether the right orbits {r u} partition the residues identically,
  /// and whether reduce(x y) depends only on the class of x as well as y.
  bool right_orbits_agree = false;
  bool multiplication_well_defined = false;

  std::size_t num_classes() const { return classes.size(); }
  std::size_t m() const { return classes.size() - 1; }
};

/// Throws ErrorCode::PartitionFailure if orbits overlap or a nonzero orbit does not
/// have exactly 8 members.
WeightClassPartition weight_classes(std::shared_ptr<const ResidueRing> ring);

} // namespace qm
