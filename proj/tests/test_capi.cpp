// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "qmcodes/qmcodes.h"

namespace {

const char* kRep3P5 =
    R"({"p":5,"pi":[2,1,0,0],"n":3,"generators":[[[1,0,0,0],[1,0,0,0],[1,0,0,0]]],"alpha_image":[0,0,1,0]})";

std::string take(char* s) {
  std::string out = s ? s : "";
  qm_free(s);
  return out;
}

} // namespace

TEST_SUITE("capi") {

TEST_CASE("ring handle") {
  const int64_t pi[4] = {2, 1, 0, 0};
  qm_ring* ring = nullptr;
  REQUIRE(qm_ring_create(pi, &ring) == QM_OK);
  CHECK(qm_ring_size(ring) == 25);
  CHECK(qm_ring_p(ring) == 5);
  int64_t out[4];
  const int64_t three[4] = {3, 0, 0, 0};
  REQUIRE(qm_ring_reduce(ring, three, out) == QM_OK);
  CHECK(out[0] == 0);
  CHECK(out[1] == 1);
  REQUIRE(qm_ring_residue(ring, 0, out) == QM_OK);
  CHECK((out[0] | out[1] | out[2] | out[3]) == 0);
  CHECK(qm_ring_residue(ring, 25, out) == QM_ERR_UNKNOWN_RESIDUE);
  int64_t d = -1;
  const int64_t one[4] = {1, 0, 0, 0};
  const int64_t i[4] = {0, 1, 0, 0};
  REQUIRE(qm_ring_distance(ring, one, i, &d) == QM_OK);
  const int64_t diff[4] = {1, -1, 0, 0};
  REQUIRE(qm_ring_reduce(ring, diff, out) == QM_OK);
  CHECK(d == std::llabs(out[0]) + std::llabs(out[1]) + std::llabs(out[2]) + std::llabs(out[3]));
  CHECK(d == 1); // 1 - i = i + (-i)(2 + i)
  qm_ring_destroy(ring);

  const int64_t bad[4] = {1, 1, 1, 1};
  CHECK(qm_ring_create(bad, &ring) == QM_ERR_NON_PRIME_NORM);
  CHECK(ring == nullptr);
  CHECK(std::string(qm_last_error()).find("NonPrimeNorm") != std::string::npos);
  CHECK(qm_ring_create(nullptr, &ring) == QM_ERR_NULL_ARGUMENT);
}

TEST_CASE("session round trip") {
  qm_options opts;
  qm_options_init(&opts);
  qm_session* s = nullptr;
  REQUIRE(qm_session_create(kRep3P5, &opts, &s) == QM_OK);
  CHECK(qm_session_code_size(s) == 25);

  char* text = nullptr;
  REQUIRE(qm_session_enumerator(s, QM_MODE_QI, QM_FORMAT_TEXT, &text) == QM_OK);
  CHECK(take(text) == "z0^3 + 8 z1^3 + 8 z2^3 + 8 z3^3\n");
  REQUIRE(qm_session_transform(s, QM_MODE_QI, QM_FORMAT_JSON, &text) == QM_OK);
  CHECK(take(text).find("192") != std::string::npos);
  REQUIRE(qm_session_dual(s, QM_MODE_QI, QM_FORMAT_TEXT, &text) == QM_OK);
  CHECK(take(text).find("192 z1 z2 z3") != std::string::npos);

  int equal = 0;
  REQUIRE(qm_session_verify(s, QM_FORMAT_TEXT, &equal, &text) == QM_OK);
  CHECK(equal == 1);
  CHECK(take(text).rfind("verdict: equal", 0) == 0);

  int64_t d = 0;
  REQUIRE(qm_session_min_distance(s, &d) == QM_OK);
  CHECK(d == 3);
  REQUIRE(qm_session_classes(s, QM_FORMAT_JSON, &text) == QM_OK);
  CHECK(!take(text).empty());
  REQUIRE(qm_session_residues(s, QM_FORMAT_TEXT, &text) == QM_OK);
  CHECK(!take(text).empty());
  REQUIRE(qm_session_correspondence(s, &text) == QM_OK);
  CHECK(!take(text).empty());
  qm_session_destroy(s);
}

TEST_CASE("errors map to status codes") {
  qm_session* s = nullptr;
  CHECK(qm_session_create("{", nullptr, &s) == QM_ERR_MALFORMED_SPEC);
  CHECK(s == nullptr);
  CHECK(std::string(qm_status_name(QM_ERR_MALFORMED_SPEC)) == "MalformedSpec");

  qm_options opts;
  qm_options_init(&opts);
  opts.budget = 10;
  REQUIRE(qm_session_create(kRep3P5, &opts, &s) == QM_OK);
  char* text = nullptr;
  CHECK(qm_session_dual(s, QM_MODE_QI, QM_FORMAT_TEXT, &text) == QM_ERR_INTRACTABLE_SIZE);
  CHECK(text == nullptr);
  CHECK(std::string(qm_last_error()).find("IntractableSize") != std::string::npos);
  qm_session_destroy(s);
  CHECK(qm_session_verify(nullptr, QM_FORMAT_TEXT, nullptr, nullptr) == QM_ERR_NULL_ARGUMENT);
}

TEST_CASE("budget from the environment and the spec") {
  const std::string spec_with_budget =
      R"({"p":5,"pi":[2,1,0,0],"n":3,"generators":[[[1,0,0,0],[1,0,0,0],[1,0,0,0]]],"budget":10})";
  qm_session* s = nullptr;
  char* text = nullptr;
  REQUIRE(qm_session_create(spec_with_budget.c_str(), nullptr, &s) == QM_OK);
  CHECK(qm_session_dual(s, QM_MODE_QI, QM_FORMAT_TEXT, &text) == QM_ERR_INTRACTABLE_SIZE);
  qm_session_destroy(s);

  setenv("QMCODES_BUDGET", "100000", 1);
  REQUIRE(qm_session_create(spec_with_budget.c_str(), nullptr, &s) == QM_OK);
  CHECK(qm_session_dual(s, QM_MODE_QI, QM_FORMAT_TEXT, &text) == QM_OK);
  qm_free(text);
  qm_session_destroy(s);

  setenv("QMCODES_BUDGET", "junk", 1);
  CHECK(qm_session_create(kRep3P5, nullptr, &s) == QM_ERR_INVALID_PARAMS);
  unsetenv("QMCODES_BUDGET");
}

}
