#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qmcodes/error.hpp"
#include "qmcodes/residue_ring.hpp"

using qm::Quaternion;
using qm::ResidueRing;

namespace {

struct Modulus {
  std::int64_t p;
  Quaternion pi;
};

const Modulus kModuli[] = {
    {3, {1, 1, 1, 0}}, {5, {2, 1, 0, 0}}, {7, {2, 1, 1, 1}}, {13, {3, 2, 0, 0}},
};

} // namespace

TEST_SUITE("residue_ring") {

TEST_CASE("prime modulus validation") {
  CHECK_NOTHROW(qm::PrimeModulus::make({1, 1, 1, 0}));
  try {
    (void)qm::PrimeModulus::make({1, 1, 1, 1});
    FAIL("norm 4 accepted");
  } catch (const qm::Error& e) {
    CHECK(e.code() == qm::ErrorCode::NonPrimeNorm);
  }
  CHECK_THROWS_AS(ResidueRing::make({0, 0, 0, 0}), qm::Error);
  CHECK_THROWS_AS(ResidueRing::make({1, 0, 0, 0}), qm::Error);
  CHECK_THROWS_AS(ResidueRing::make({3, 0, 0, 0}), qm::Error); // norm 9
}

TEST_CASE("small reductions") {
  const auto r5 = ResidueRing::make({2, 1, 0, 0});
  CHECK(r5->reduce(Quaternion(3)) == qm::units::i);
  const auto r3 = ResidueRing::make({1, 1, 1, 0});
  CHECK(r3->reduce({0, 1, 1, 0}) == Quaternion(-1));
}

TEST_CASE("canonical representatives match the exhaustive box search") {
  std::mt19937_64 rng(99);
  for (const auto& [p, pi] : kModuli) {
    CAPTURE(p);
    const auto ring = ResidueRing::make(pi);
    const auto reps = oracle::canonical_reps(pi, p);
    REQUIRE(ring->size() == static_cast<std::size_t>(p * p));
    REQUIRE(reps.size() == ring->size());

    std::set<Quaternion> expected;
    for (const auto& [key, q] : reps)
      expected.insert(q);
    std::set<Quaternion> actual(ring->residues().begin(), ring->residues().end());
    CHECK(actual == expected);
    CHECK(ring->at(0) == Quaternion{});

    std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
    for (int trial = 0; trial < 300; ++trial) {
      const Quaternion x{coord(rng), coord(rng), coord(rng), coord(rng)};
      const auto r = ring->reduce(x);
      CHECK(r == reps.at(oracle::class_key(x, pi, p)));
      CHECK(ring->qm_weight(ring->index_of(x)) == oracle::weight(r));
      // x - reduce(x) is a left multiple of pi
      CHECK(oracle::class_key(x - r, pi, p) == oracle::Vec4{0, 0, 0, 0});
    }
  }
}

TEST_CASE("tables agree with quaternion arithmetic") {
  for (const auto& [p, pi] : kModuli) {
    CAPTURE(p);
    const auto ring = ResidueRing::make(pi);
    const auto n = ring->size();
    for (std::size_t x = 0; x < n; ++x) {
      const auto rx = static_cast<qm::ResidueIndex>(x);
      CHECK(ring->add(rx, ring->neg(rx)) == 0);
      CHECK(ring->scalar_mul(p, rx) == 0);
      for (std::size_t y = 0; y < n; y += 7) {
        const auto ry = static_cast<qm::ResidueIndex>(y);
        CHECK(ring->at(ring->add(rx, ry)) == ring->reduce(ring->at(rx) + ring->at(ry)));
        CHECK(ring->at(ring->mul(rx, ry)) == ring->reduce(ring->at(rx) * ring->at(ry)));
        CHECK(ring->qm_distance(ring->at(rx), ring->at(ry)) == ring->qm_weight(ring->sub(rx, ry)));
      }
    }
  }
}

TEST_CASE("unknown residues are rejected") {
  const auto ring = ResidueRing::make({2, 1, 0, 0});
  CHECK(ring->find({0, 1, 0, 0}).has_value());
  CHECK_FALSE(ring->find({3, 0, 0, 0}).has_value());
}

}

TEST_SUITE("weight_classes") {

TEST_CASE("class counts and sizes") {
  const std::pair<std::int64_t, Quaternion> cases[] = {
      {3, {1, 1, 1, 0}}, {5, {2, 1, 0, 0}}, {7, {2, 1, 1, 1}}, {13, {3, 2, 0, 0}}, {17, {4, 1, 0, 0}},
  };
  for (const auto& [p, pi] : cases) {
    CAPTURE(p);
    const auto ring = ResidueRing::make(pi);
    const auto part = qm::weight_classes(ring);
    CHECK(ring->size() == static_cast<std::size_t>(p * p));
    CHECK(part.m() == static_cast<std::size_t>((p * p - 1) / 8));
    CHECK(part.num_classes() == part.m() + 1);
    CHECK(part.classes[0] == std::vector<qm::ResidueIndex>{0});
    std::set<qm::ResidueIndex> seen;
    for (std::size_t t = 1; t < part.num_classes(); ++t) {
      CHECK(part.classes[t].size() == 8);
      seen.insert(part.classes[t].begin(), part.classes[t].end());
      CHECK(part.class_of[part.reps[t]] == t);
      for (auto r : part.classes[t]) {
        CHECK(part.class_of[r] == t);
        CHECK(ring->unit_orbit(r) == part.classes[t]);
      }
    }
    CHECK(seen.size() == ring->size() - 1);
    CHECK(ring->at(part.reps[1]) == Quaternion(1));
  }
}

TEST_CASE("p = 5 classes are the orbits of 1, 1 + j and 1 + k") {
  const auto ring = ResidueRing::make({2, 1, 0, 0});
  const auto part = qm::weight_classes(ring);
  std::set<std::size_t> classes;
  for (const Quaternion& q : {Quaternion{1, 0, 0, 0}, Quaternion{1, 0, 1, 0}, Quaternion{1, 0, 0, 1}})
    classes.insert(part.class_of[ring->index_of(q)]);
  CHECK(classes == std::set<std::size_t>{1, 2, 3});
}

}
