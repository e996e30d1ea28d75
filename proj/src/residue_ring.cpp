#include "qmcodes/residue_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "qmcodes/checked.hpp"
#include "qmcodes/error.hpp"
#include "qmcodes/galois_field.hpp"

namespace qm {

PrimeModulus PrimeModulus::make(const Quaternion& pi) {
  const auto p = norm(pi);
  if (p == 2 || !is_prime(p)) {
    std::ostringstream os;
    os << "norm(" << pi << ") = " << p << " is not an odd prime";
    throw Error(ErrorCode::NonPrimeNorm, os.str());
  }
  return {pi, p, conjugate(pi)};
}

std::int64_t qm_weight(const Quaternion& canonical) { return coord_weight(canonical); }

ResidueRing::ResidueRing(PrimeModulus mod) : mod_(std::move(mod)) {}

std::shared_ptr<const ResidueRing> ResidueRing::make(const Quaternion& pi) {
  auto mod = PrimeModulus::make(pi);
  const auto p = mod.p;
  if (p * p > kMaxSize)
    throw Error(ErrorCode::InvalidParams,
                "p = " + std::to_string(p) + " exceeds the supported ring size p^2 <= " +
                    std::to_string(kMaxSize));

  std::shared_ptr<ResidueRing> ring(new ResidueRing(mod));

  // p = conj(pi) pi lies in H[Z] pi, so [0, p)^4 meets every class.
  std::set<Quaternion, decltype(&weight_lex_less)> found(&weight_lex_less);
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d)
          found.insert(ring->reduce({a, b, c, d}));

  if (static_cast<std::int64_t>(found.size()) != p * p)
    throw Error(ErrorCode::PartitionFailure, "found " + std::to_string(found.size()) +
                                                 " residues, expected " + std::to_string(p * p));

  ring->residues_.assign(found.begin(), found.end());
  const auto n = ring->residues_.size();
  for (std::size_t r = 0; r < n; ++r) {
    ring->index_[ring->residues_[r]] = static_cast<ResidueIndex>(r);
    ring->weights_.push_back(coord_weight(ring->residues_[r]));
  }

  ring->add_.resize(n * n);
  ring->mul_.resize(n * n);
  ring->neg_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& qx = ring->residues_[x];
    ring->neg_[x] = ring->index_of(-qx);
    for (std::size_t y = 0; y < n; ++y) {
      const auto& qy = ring->residues_[y];
      ring->add_[x * n + y] = ring->index_of(qx + qy);
      ring->mul_[x * n + y] = ring->index_of(qx * qy);
    }
  }
  return ring;
}

Quaternion ResidueRing::reduce(const Quaternion& x) const {
  const auto p = mod_.p;
  const auto c = x * mod_.pi_conj;
  // round(c / p) as floor((2c + p) / 2p)
  auto round_div = [&](std::int64_t v) {
    return checked::floor_div(checked::add(checked::mul(2, v), p), 2 * p);
  };
  const std::int64_t base[4] = {round_div(c.a0), round_div(c.a1), round_div(c.a2), round_div(c.a3)};

  Quaternion best;
  bool have = false;
  for (int d0 = -1; d0 <= 1; ++d0)
    for (int d1 = -1; d1 <= 1; ++d1)
      for (int d2 = -1; d2 <= 1; ++d2)
        for (int d3 = -1; d3 <= 1; ++d3) {
          const Quaternion q{base[0] + d0, base[1] + d1, base[2] + d2, base[3] + d3};
          auto r = x - q * mod_.pi;
          if (!have || weight_lex_less(r, best)) {
            best = r;
            have = true;
          }
        }
  return best;
}

ResidueIndex ResidueRing::index_of(const Quaternion& x) const {
  auto it = index_.find(reduce(x));
  if (it == index_.end()) {
    std::ostringstream os;
    os << "reduce(" << x << ") is not a known residue";
    throw Error(ErrorCode::PartitionFailure, os.str());
  }
  return it->second;
}

std::optional<ResidueIndex> ResidueRing::find(const Quaternion& canonical) const {
  auto it = index_.find(canonical);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ResidueIndex ResidueRing::scalar_mul(std::int64_t k, ResidueIndex x) const {
  return index_of(scale(checked::mod(k, mod_.p), residues_[x]));
}

std::int64_t ResidueRing::qm_distance(const Quaternion& x, const Quaternion& y) const {
  return coord_weight(reduce(x - y));
}

std::vector<ResidueIndex> ResidueRing::unit_orbit(ResidueIndex r) const {
  std::vector<ResidueIndex> orbit;
  for (const auto& u : kUnits)
    orbit.push_back(index_of(u * residues_[r]));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

namespace {

bool right_orbits_match(const ResidueRing& ring, const WeightClassPartition& part) {
  for (std::size_t r = 1; r < ring.size(); ++r)
    for (const auto& u : kUnits)
      if (part.class_of[ring.index_of(ring.at(static_cast<ResidueIndex>(r)) * u)] != part.class_of[r])
        return false;
  return true;
}

bool products_class_consistent(const ResidueRing& ring) {
  const auto& pi = ring.modulus().pi;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    const auto shifted = ring.at(static_cast<ResidueIndex>(x)) + pi;
    for (std::size_t y = 0; y < ring.size(); ++y)
      if (ring.index_of(shifted * ring.at(static_cast<ResidueIndex>(y))) !=
          ring.mul(static_cast<ResidueIndex>(x), static_cast<ResidueIndex>(y)))
        return false;
  }
  return true;
}

} // namespace

WeightClassPartition weight_classes(std::shared_ptr<const ResidueRing> ring) {
  const auto n = ring->size();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  WeightClassPartition part;
  part.ring = ring;
  part.class_of.assign(n, kUnassigned);
  part.class_of[0] = 0;

  // Residue indices follow (weight, lex) order, so visiting them in order yields
  // classes sorted by their minimum member.
  std::vector<std::vector<ResidueIndex>> orbits;
  for (std::size_t r = 1; r < n; ++r) {
    if (part.class_of[r] != kUnassigned)
      continue;
    auto orbit = ring->unit_orbit(static_cast<ResidueIndex>(r));
    if (orbit.size() != kUnits.size())
      throw Error(ErrorCode::PartitionFailure, "unit orbit of residue " + std::to_string(r) + " has " +
                                                   std::to_string(orbit.size()) + " elements");
    for (auto x : orbit)
      if (part.class_of[x] != kUnassigned)
        throw Error(ErrorCode::PartitionFailure, "unit orbits overlap");
    for (auto x : orbit)
      part.class_of[x] = orbits.size() + 1;
    orbits.push_back(std::move(orbit));
  }

  const auto one = ring->index_of(units::one);
  const auto one_class = part.class_of[one];
  if (one_class != 1)
    throw Error(ErrorCode::PartitionFailure, "the class of 1 is not a minimum-weight class");

  part.classes.push_back({0});
  part.reps.push_back(0);
  for (auto& orbit : orbits) {
    part.reps.push_back(part.classes.size() == 1 ? one : orbit.front());
    part.classes.push_back(std::move(orbit));
  }

  part.right_orbits_agree = right_orbits_match(*ring, part);
  part.multiplication_well_defined = products_class_consistent(*ring);
  return part;
}

} // namespace qm
