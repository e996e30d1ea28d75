#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qmcodes/codes.hpp"
#include "qmcodes/correspondence.hpp"
#include "qmcodes/error.hpp"

using qm::Code;
using qm::Quaternion;
using qm::ResidueRing;
using qm::Word;

namespace {

struct Fixture {
  std::int64_t p;
  Quaternion pi;
  std::shared_ptr<const ResidueRing> ring;
  std::shared_ptr<const qm::Correspondence> corr;

  Fixture(std::int64_t p_, Quaternion pi_)
      : p(p_), pi(pi_), ring(ResidueRing::make(pi_)),
        corr(qm::Correspondence::build(qm::FieldSpec::make(p_, 2), ring)) {}

  Word word(std::initializer_list<Quaternion> qs) const {
    Word w;
    for (const auto& q : qs)
      w.push_back(ring->index_of(q));
    return w;
  }
};

// All v with sum_t sandwich(c_t, v_t) = 0 for every codeword c.
std::vector<std::uint64_t> naive_dual(const Code& code, const Fixture& fx) {
  const auto& ring = *fx.ring;
  const auto q = ring.size();
  const auto n = code.length();
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < n; ++t)
    total *= q;
  const auto words = code.words();
  std::vector<std::uint64_t> out;
  for (std::uint64_t key = 0; key < total; ++key) {
    const auto v = code.decode(key);
    bool orthogonal = true;
    for (const auto& c : words) {
      oracle::Vec4 sum{};
      for (std::size_t t = 0; t < n; ++t) {
        const auto s = oracle::sandwich(ring.at(c[t]), ring.at(v[t]), fx.pi, fx.p);
        for (int a = 0; a < 4; ++a)
          sum[a] = (sum[a] + s[a]) % fx.p;
      }
      if (sum != oracle::Vec4{}) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal)
      out.push_back(key);
  }
  return out;
}

std::int64_t naive_min_distance(const Code& code) {
  std::int64_t best = -1;
  for (const auto& w : code.words()) {
    std::int64_t wt = 0;
    for (auto r : w)
      wt += oracle::weight(code.ring().at(r));
    if (wt > 0 && (best < 0 || wt < best))
      best = wt;
  }
  return best;
}

} // namespace

TEST_SUITE("codes") {

TEST_CASE("span sizes of the fixtures") {
  const Fixture f3(3, {1, 1, 1, 0});
  const auto c1 = Code::span(f3.ring, 2, {f3.word({1, 1})});
  CHECK(c1.size() == 9);
  CHECK(c1.left_closed());
  CHECK(c1.dimension() == std::size_t{1});

  const Fixture f5(5, {2, 1, 0, 0});
  const auto c2 = Code::span(f5.ring, 3, {f5.word({1, 1, 1})});
  CHECK(c2.size() == 25);

  const auto zero = Code::span(f5.ring, 2, {f5.word({0, 0})});
  CHECK(zero.size() == 1);
  CHECK(Code::span(f5.ring, 2, {}).size() == 1);
}

TEST_CASE("encode and decode are inverse") {
  const Fixture f(5, {2, 1, 0, 0});
  const auto c = Code::span(f.ring, 3, {f.word({1, {0, 1, 0, 0}, {1, 1, 0, 0}})});
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c.encode(c.word(i)) == c.keys()[i]);
    CHECK(c.contains(c.word(i)));
  }
}

TEST_CASE("additive span and closure flag") {
  const Fixture f(3, {1, 1, 1, 0});
  const auto c = Code::additive_span(f.ring, 1, {f.word({1})});
  CHECK(c.size() == 3);
  CHECK(c.additive_closed());
  const auto bad = Code::from_keys(f.ring, 1, {0, c.keys()[1]});
  CHECK_FALSE(bad.additive_closed());
}

TEST_CASE("dual agrees with the naive sandwich search") {
  std::mt19937_64 rng(3);
  for (auto [p, pi] : {std::pair<std::int64_t, Quaternion>{3, {1, 1, 1, 0}}, {5, {2, 1, 0, 0}}}) {
    const Fixture fx(p, pi);
    for (std::size_t n = 1; n <= 2; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(trial);
        std::vector<Word> gens(1 + rng() % n);
        for (auto& g : gens)
          for (std::size_t t = 0; t < n; ++t)
            g.push_back(static_cast<qm::ResidueIndex>(rng() % fx.ring->size()));
        const auto c = Code::span(fx.ring, n, gens);
        const auto d = qm::dual(c, fx.corr.get());
        CHECK(d.keys() == naive_dual(c, fx));
        CHECK(c.size() * d.size() == static_cast<std::size_t>(std::pow(p, 2 * n)));
        CHECK(qm::pairs_to_zero(c, d, fx.corr.get(), qm::Pairing::form));
        CHECK(qm::dual(d, fx.corr.get()) == c);
      }
    }
  }
}

TEST_CASE("threaded dual matches the serial one") {
  const Fixture fx(7, {2, 1, 1, 1});
  const auto c = Code::span(fx.ring, 2, {fx.word({1, {1, 1, 0, 0}})});
  qm::DualOptions serial, threaded;
  threaded.jobs = 4;
  CHECK(qm::dual(c, fx.corr.get(), serial) == qm::dual(c, fx.corr.get(), threaded));
}

TEST_CASE("budget is enforced") {
  const Fixture fx(5, {2, 1, 0, 0});
  const auto c = Code::span(fx.ring, 3, {fx.word({1, 1, 1})});
  qm::DualOptions opts;
  opts.budget = 1000;
  try {
    (void)qm::dual(c, fx.corr.get(), opts);
    FAIL("budget ignored");
  } catch (const qm::Error& e) {
    CHECK(e.code() == qm::ErrorCode::IntractableSize);
  }
}

TEST_CASE("left_product pairing is not additive") {
  // The rule reduce(sum c_t v_t) = 0 on canonical representatives.
  const Fixture fx(3, {1, 1, 1, 0});
  const auto c = Code::span(fx.ring, 3, {fx.word({qm::units::i, 1, qm::units::j})});
  qm::DualOptions opts;
  opts.pairing = qm::Pairing::left_product;
  const auto d = qm::dual(c, fx.corr.get(), opts);
  CHECK(c.size() == 81);
  CHECK(c.size() * d.size() != 729);
}

TEST_CASE("minimum distance") {
  const Fixture f3(3, {1, 1, 1, 0});
  const auto c1 = Code::span(f3.ring, 2, {f3.word({1, 1})});
  CHECK(qm::min_qm_distance(c1) == 2);
  const Fixture f5(5, {2, 1, 0, 0});
  const auto c2 = Code::span(f5.ring, 3, {f5.word({1, 1, 1})});
  CHECK(qm::min_qm_distance(c2) == 3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = Code::span(f5.ring, 2,
                              {{static_cast<qm::ResidueIndex>(rng() % 25), static_cast<qm::ResidueIndex>(rng() % 25)}});
    if (c.size() > 1)
      CHECK(qm::min_qm_distance(c) == naive_min_distance(c));
  }
  try {
    (void)qm::min_qm_distance(Code::span(f5.ring, 2, {}));
    FAIL("expected EmptyCode");
  } catch (const qm::Error& e) {
    CHECK(e.code() == qm::ErrorCode::EmptyCode);
  }
}

TEST_CASE("weight enumerators") {
  const Fixture f5(5, {2, 1, 0, 0});
  const auto part = qm::weight_classes(f5.ring);
  const auto c = Code::span(f5.ring, 3, {f5.word({1, 1, 1})});
  const auto w = qm::weight_enumerator(c, qm::Classifier::qi(part));
  CHECK(w.evaluate_at_ones() == qm::CyclotomicInt(5, 25));
  CHECK(w.to_string() == "z0^3 + 8 z1^3 + 8 z2^3 + 8 z3^3");
  const auto complete = qm::weight_enumerator(c, qm::Classifier::complete(*f5.corr));
  CHECK(complete.num_vars() == 25);
  CHECK(complete.terms().size() == 25);
  CHECK(complete.evaluate_at_ones() == qm::CyclotomicInt(5, 25));
  CHECK(qm::composition(std::vector<Quaternion>{1, {0, 0, 1, 0}, 0}, *f5.ring, qm::Classifier::qi(part)).size() == 4);
  CHECK_THROWS_AS(qm::composition(std::vector<Quaternion>{{3, 0, 0, 0}}, *f5.ring, qm::Classifier::qi(part)),
                  qm::Error);
}

}

TEST_SUITE("enumerator_mass") {

TEST_CASE("enumerator at all-ones equals the code size") {
  std::mt19937_64 rng(5);
  for (auto [p, pi] : {std::pair<std::int64_t, Quaternion>{3, {1, 1, 1, 0}}, {5, {2, 1, 0, 0}}, {7, {2, 1, 1, 1}},
                       {13, {3, 2, 0, 0}}}) {
    const Fixture fx(p, pi);
    const auto part = qm::weight_classes(fx.ring);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + rng() % 3;
      std::vector<Word> gens(1 + rng() % 2);
      for (auto& g : gens)
        for (std::size_t t = 0; t < n; ++t)
          g.push_back(static_cast<qm::ResidueIndex>(rng() % fx.ring->size()));
      const auto c = Code::span(fx.ring, n, gens);
      const auto size = static_cast<std::int64_t>(c.size());
      CHECK(qm::weight_enumerator(c, qm::Classifier::qi(part)).evaluate_at_ones() == qm::CyclotomicInt(p, size));
      CHECK(qm::weight_enumerator(c, qm::Classifier::complete(*fx.corr)).evaluate_at_ones() ==
            qm::CyclotomicInt(p, size));
    }
  }
}

}
