#include <doctest.h>

#include "qmcodes/enumerator.hpp"
#include "qmcodes/error.hpp"

using qm::CyclotomicInt;
using qm::Enumerator;
using qm::Monomial;

namespace {

Enumerator rep2_primal() {
  Enumerator w(2, 3);
  w.add_term({2, 0}, CyclotomicInt(3, 1));
  w.add_term({0, 2}, CyclotomicInt(3, 8));
  return w;
}

std::vector<std::vector<CyclotomicInt>> integer_rows(int p, const std::vector<std::vector<std::int64_t>>& k) {
  std::vector<std::vector<CyclotomicInt>> rows;
  for (const auto& r : k) {
    auto& out = rows.emplace_back();
    for (auto v : r)
      out.emplace_back(p, v);
  }
  return rows;
}

} // namespace

TEST_SUITE("enumerator") {

TEST_CASE("terms are kept sparse and ordered") {
  Enumerator w(2, 3);
  w.add_term({0, 2}, CyclotomicInt(3, 8));
  w.add_term({2, 0}, CyclotomicInt(3, 1));
  w.add_term({1, 1}, CyclotomicInt(3, 4));
  w.add_term({1, 1}, CyclotomicInt(3, -4));
  CHECK(w.terms().size() == 2);
  CHECK(w.terms().begin()->first == Monomial{2, 0});
  CHECK(w.to_string() == "z0^2 + 8 z1^2");
  CHECK(w == rep2_primal());
}

TEST_CASE("products and evaluation") {
  const auto a = Enumerator::linear({CyclotomicInt(3, 1), CyclotomicInt(3, 2)});
  const auto sq = a * a; // z0^2 + 4 z0 z1 + 4 z1^2
  CHECK(sq.terms().at({1, 1}) == CyclotomicInt(3, 4));
  CHECK(sq.evaluate_at_ones() == CyclotomicInt(3, 9));
  CHECK(Enumerator::constant(2, 3, 5).evaluate_at_ones() == CyclotomicInt(3, 5));
}

TEST_CASE("p = 3 repetition code is self-dual under substitution") {
  // z0 -> z0 + 8 z1, z1 -> z0 - z1, divided by 9
  const auto rows = integer_rows(3, {{1, 8}, {1, -1}});
  CHECK(rep2_primal().substitute(rows, 9) == rep2_primal());
  qm::SubstitutionCache cache(rows);
  CHECK(cache.apply(rep2_primal(), 9) == rep2_primal());
  CHECK(cache.apply(rep2_primal(), 9) == rep2_primal());
}

TEST_CASE("inexact division is reported") {
  const auto rows = integer_rows(3, {{1, 8}, {1, -1}});
  try {
    (void)rep2_primal().substitute(rows, 7);
    FAIL("expected InexactDivision");
  } catch (const qm::Error& e) {
    CHECK(e.code() == qm::ErrorCode::InexactDivision);
  }
}

TEST_CASE("collapse merges variables") {
  Enumerator w(3, 5);
  w.add_term({1, 1, 0}, CyclotomicInt(5, 2));
  w.add_term({1, 0, 1}, CyclotomicInt(5, 3));
  const auto c = w.collapse({0, 1, 1}, 2);
  CHECK(c.terms().size() == 1);
  CHECK(c.terms().at({1, 1}) == CyclotomicInt(5, 5));
}

TEST_CASE("integer terms") {
  CHECK(rep2_primal().integer_terms().at({0, 2}) == 8);
  Enumerator w(1, 5);
  w.add_term({1}, CyclotomicInt::root(5, 1));
  CHECK_THROWS_AS(w.integer_terms(), qm::Error);
  CHECK(w.to_string().find('(') != std::string::npos);
}

TEST_CASE("composition") {
  CHECK(qm::composition(std::vector<std::size_t>{1, 0, 1, 3}, 4) == Monomial{1, 2, 0, 1});
  CHECK_THROWS_AS(qm::composition(std::vector<std::size_t>{4}, 4), qm::Error);
}

}
