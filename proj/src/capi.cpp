#include "qmcodes/qmcodes.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <thread>

#include "qmcodes/error.hpp"
#include "qmcodes/io.hpp"
#include "qmcodes/session.hpp"

struct qm_ring {
  std::shared_ptr<const qm::ResidueRing> ring;
};

struct qm_session {
  std::unique_ptr<qm::Session> session;
};

namespace {

thread_local std::string last_error;

qm_status status_of(qm::ErrorCode code) {
  using qm::ErrorCode;
  switch (code) {
  case ErrorCode::InvalidParams: return QM_ERR_INVALID_PARAMS;
  case ErrorCode::MalformedSpec: return QM_ERR_MALFORMED_SPEC;
  case ErrorCode::Overflow: return QM_ERR_OVERFLOW;
  case ErrorCode::NonPrimeNorm: return QM_ERR_NON_PRIME_NORM;
  case ErrorCode::PartitionFailure: return QM_ERR_PARTITION_FAILURE;
  case ErrorCode::MixedOrder: return QM_ERR_MIXED_ORDER;
  case ErrorCode::NotRational: return QM_ERR_NOT_RATIONAL;
  case ErrorCode::NoIndependentUnit: return QM_ERR_NO_INDEPENDENT_UNIT;
  case ErrorCode::UnknownResidue: return QM_ERR_UNKNOWN_RESIDUE;
  case ErrorCode::InexactDivision: return QM_ERR_INEXACT_DIVISION;
  case ErrorCode::NegativeCoefficient: return QM_ERR_NEGATIVE_COEFFICIENT;
  case ErrorCode::IntractableSize: return QM_ERR_INTRACTABLE_SIZE;
  case ErrorCode::EmptyCode: return QM_ERR_EMPTY_CODE;
  }
  return QM_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes and last_error.
template <class F> qm_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return QM_OK;
  } catch (const qm::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return QM_ERR_INTERNAL;
  }
}

qm_status null_arg(const char* name) {
  last_error = std::string("null argument: ") + name;
  return QM_ERR_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qm::Quaternion quat(const int64_t x[4]) { return {x[0], x[1], x[2], x[3]}; }

void store(const qm::Quaternion& q, int64_t out[4]) {
  const auto a = q.to_array();
  for (int t = 0; t < 4; ++t)
    out[t] = a[t];
}

qm::EnumeratorMode mode_of(qm_mode m) {
  return m == QM_MODE_COMPLETE ? qm::EnumeratorMode::complete : qm::EnumeratorMode::qi;
}

std::string render(const qm::Enumerator& e, qm_format format) {
  return format == QM_FORMAT_JSON ? qm::io::enumerator_json(e) : e.to_string() + "\n";
}

std::uint64_t resolve_budget(std::uint64_t requested, const qm::CodeSpec& spec) {
  if (requested)
    return requested;
  if (const char* env = std::getenv("QMCODES_BUDGET"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0)
      throw qm::Error(qm::ErrorCode::InvalidParams, std::string("QMCODES_BUDGET is not a positive integer: ") + env);
    return v;
  }
  if (spec.budget)
    return *spec.budget;
  return qm::DualOptions{}.budget;
}

} // namespace

extern "C" {

void qm_options_init(qm_options* opts) {
  if (opts) {
    opts->budget = 0;
    opts->jobs = 1;
  }
}

const char* qm_last_error(void) { return last_error.c_str(); }

const char* qm_status_name(qm_status status) {
  switch (status) {
  case QM_OK: return "Ok";
  case QM_ERR_MALFORMED_SPEC: return "MalformedSpec";
  case QM_ERR_INVALID_PARAMS: return "InvalidParams";
  case QM_ERR_OVERFLOW: return "Overflow";
  case QM_ERR_NON_PRIME_NORM: return "NonPrimeNorm";
  case QM_ERR_PARTITION_FAILURE: return "PartitionFailure";
  case QM_ERR_MIXED_ORDER: return "MixedOrder";
  case QM_ERR_NOT_RATIONAL: return "NotRational";
  case QM_ERR_NO_INDEPENDENT_UNIT: return "NoIndependentUnit";
  case QM_ERR_UNKNOWN_RESIDUE: return "UnknownResidue";
  case QM_ERR_INEXACT_DIVISION: return "InexactDivision";
  case QM_ERR_NEGATIVE_COEFFICIENT: return "NegativeCoefficient";
  case QM_ERR_INTRACTABLE_SIZE: return "IntractableSize";
  case QM_ERR_EMPTY_CODE: return "EmptyCode";
  case QM_ERR_NULL_ARGUMENT: return "NullArgument";
  case QM_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void qm_free(void* ptr) { std::free(ptr); }

qm_status qm_ring_create(const int64_t pi[4], qm_ring** out) {
  if (!pi)
    return null_arg("pi");
  if (!out)
    return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new qm_ring{qm::ResidueRing::make(quat(pi))}; });
}

void qm_ring_destroy(qm_ring* ring) { delete ring; }

size_t qm_ring_size(const qm_ring* ring) { return ring ? ring->ring->size() : 0; }

int64_t qm_ring_p(const qm_ring* ring) { return ring ? ring->ring->p() : 0; }

qm_status qm_ring_residue(const qm_ring* ring, size_t index, int64_t out[4]) {
  if (!ring)
    return null_arg("ring");
  if (!out)
    return null_arg("out");
  return guarded([&] {
    if (index >= ring->ring->size())
      throw qm::Error(qm::ErrorCode::UnknownResidue, "residue index " + std::to_string(index) + " out of range");
    store(ring->ring->at(static_cast<qm::ResidueIndex>(index)), out);
  });
}

qm_status qm_ring_reduce(const qm_ring* ring, const int64_t x[4], int64_t out[4]) {
  if (!ring)
    return null_arg("ring");
  if (!x)
    return null_arg("x");
  if (!out)
    return null_arg("out");
  return guarded([&] { store(ring->ring->reduce(quat(x)), out); });
}

qm_status qm_ring_distance(const qm_ring* ring, const int64_t x[4], const int64_t y[4], int64_t* out) {
  if (!ring)
    return null_arg("ring");
  if (!x || !y)
    return null_arg("x/y");
  if (!out)
    return null_arg("out");
  return guarded([&] {
    const auto& r = *ring->ring;
    *out = r.qm_distance(quat(x), quat(y));
  });
}

qm_status qm_session_create(const char* spec_json, const qm_options* opts, qm_session** out) {
  if (!spec_json)
    return null_arg("spec_json");
  if (!out)
    return null_arg("out");
  *out = nullptr;
  qm_options o;
  qm_options_init(&o);
  if (opts)
    o = *opts;
  return guarded([&] {
    auto spec = qm::parse_code_spec(spec_json);
    qm::DualOptions d;
    d.budget = resolve_budget(o.budget, spec);
    d.jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    *out = new qm_session{std::make_unique<qm::Session>(std::move(spec), d)};
  });
}

void qm_session_destroy(qm_session* session) { delete session; }

size_t qm_session_code_size(const qm_session* session) { return session ? session->session->code().size() : 0; }

qm_status qm_session_residues(const qm_session* session, qm_format format, char** out) {
  if (!session)
    return null_arg("session");
  if (!out)
    return null_arg("out");
  return guarded([&] {
    const auto& ring = *session->session->ring();
    *out = dup(format == QM_FORMAT_JSON ? qm::io::residues_json(ring) : qm::io::residues_text(ring));
  });
}

qm_status qm_session_classes(const qm_session* session, qm_format format, char** out) {
  if (!session)
    return null_arg("session");
  if (!out)
    return null_arg("out");
  return guarded([&] {
    const auto& part = session->session->partition();
    *out = dup(format == QM_FORMAT_JSON ? qm::io::classes_json(part) : qm::io::classes_text(part));
  });
}

qm_status qm_session_correspondence(const qm_session* session, char** out) {
  if (!session)
    return null_arg("session");
  if (!out)
    return null_arg("out");
  return guarded([&] { *out = dup(qm::io::correspondence_json(session->session->correspondence())); });
}

qm_status qm_session_enumerator(const qm_session* session, qm_mode mode, qm_format format, char** out) {
  if (!session)
    return null_arg("session");
  if (!out)
    return null_arg("out");
  return guarded([&] { *out = dup(render(session->session->enumerator(mode_of(mode)), format)); });
}

qm_status qm_session_dual(qm_session* session, qm_mode mode, qm_format format, char** out) {
  if (!session)
    return null_arg("session");
  if (!out)
    return null_arg("out");
  return guarded([&] { *out = dup(render(session->session->dual_enumerator(mode_of(mode)), format)); });
}

qm_status qm_session_transform(const qm_session* session, qm_mode mode, qm_format format, char** out) {
  if (!session)
    return null_arg("session");
  if (!out)
    return null_arg("out");
  return guarded([&] { *out = dup(render(session->session->transform(mode_of(mode)), format)); });
}

qm_status qm_session_verify(qm_session* session, qm_format format, int* equal, char** out) {
  if (!session)
    return null_arg("session");
  return guarded([&] {
    const auto report = session->session->verify();
    if (equal)
      *equal = report.equal ? 1 : 0;
    if (out)
      *out = dup(format == QM_FORMAT_JSON ? qm::io::report_json(report) : qm::io::report_text(report));
  });
}

qm_status qm_session_min_distance(const qm_session* session, int64_t* out) {
  if (!session)
    return null_arg("session");
  if (!out)
    return null_arg("out");
  return guarded([&] { *out = session->session->min_distance(); });
}

} // extern "C"
