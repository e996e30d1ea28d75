// qmcodes: command-line front end over the libqmcodes C API.
//
// Exit status: 0 ok, 1 malformed spec or usage, 2 computation error,
// 3 verify found the transformed and brute-force enumerators unequal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qmcodes/qmcodes.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitComputation = 2;
constexpr int kExitMismatch = 3;

struct SessionDeleter {
  void operator()(qm_session* s) const { qm_session_destroy(s); }
};
using SessionPtr = std::unique_ptr<qm_session, SessionDeleter>;

int fail(qm_status st) {
  std::cerr << "error: " << qm_status_name(st) << ": " << qm_last_error() << '\n';
  return st == QM_ERR_MALFORMED_SPEC ? kExitMalformed : kExitComputation;
}

// Prints and frees a C string returned by the library.
void emit(char* text) {
  std::cout << text;
  qm_free(text);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion-integer codes: residue rings, weight enumerators and MacWilliams transforms"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string mode = "qi";
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t budget = 0;

  auto add_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("spec", spec_path, "code spec (JSON, see docs/code_spec.schema.json)")->required();
    if (with_mode)
      cmd->add_option("--mode", mode, "enumerator kind")->check(CLI::IsMember({"qi", "complete"}));
    cmd->add_option("--format", format, "output rendering")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", jobs, "worker threads for the dual search (0 = all cores)");
    cmd->add_option("--budget", budget, "cap on brute-force work (overrides QMCODES_BUDGET and the spec)")
        ->check(CLI::PositiveNumber);
  };
  auto* residues = app.add_subcommand("residues", "list canonical residues of H[Z]_pi");
  auto* classes = app.add_subcommand("classes", "list unit-orbit weight classes");
  auto* enumerate = app.add_subcommand("enum", "weight enumerator of the code");
  auto* dual = app.add_subcommand("dual", "weight enumerator of the brute-force dual");
  auto* transform = app.add_subcommand("transform", "MacWilliams image of the code's enumerator");
  auto* verify = app.add_subcommand("verify", "compare the transform against the brute-force dual");
  auto* mindist = app.add_subcommand("mindist", "minimum QM distance of the code");
  add_common(residues, false);
  add_common(classes, false);
  add_common(enumerate, true);
  add_common(dual, true);
  add_common(transform, true);
  add_common(verify, false);
  add_common(mindist, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitMalformed;
  }

  std::ifstream in(spec_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: MalformedSpec: cannot read " << spec_path << '\n';
    return kExitMalformed;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  qm_options opts;
  qm_options_init(&opts);
  opts.budget = budget;
  opts.jobs = jobs;
  qm_session* raw = nullptr;
  if (auto st = qm_session_create(buf.str().c_str(), &opts, &raw); st != QM_OK)
    return fail(st);
  SessionPtr session(raw);

  const auto fmt = format == "json" ? QM_FORMAT_JSON : QM_FORMAT_TEXT;
  const auto md = mode == "complete" ? QM_MODE_COMPLETE : QM_MODE_QI;
  char* out = nullptr;
  qm_status st = QM_OK;

  if (residues->parsed()) {
    st = qm_session_residues(session.get(), fmt, &out);
  } else if (classes->parsed()) {
    st = qm_session_classes(session.get(), fmt, &out);
  } else if (enumerate->parsed()) {
    st = qm_session_enumerator(session.get(), md, fmt, &out);
  } else if (dual->parsed()) {
    st = qm_session_dual(session.get(), md, fmt, &out);
  } else if (transform->parsed()) {
    st = qm_session_transform(session.get(), md, fmt, &out);
  } else if (verify->parsed()) {
    int equal = 0;
    st = qm_session_verify(session.get(), fmt, &equal, &out);
    if (st != QM_OK)
      return fail(st);
    emit(out);
    return equal ? kExitOk : kExitMismatch;
  } else if (mindist->parsed()) {
    std::int64_t d = 0;
    st = qm_session_min_distance(session.get(), &d);
    if (st != QM_OK)
      return fail(st);
    if (fmt == QM_FORMAT_JSON)
      std::cout << "{\n  \"min_distance\": " << d << "\n}\n";
    else
      std::cout << d << '\n';
    return kExitOk;
  }
  if (st != QM_OK)
    return fail(st);
  emit(out);
  return kExitOk;
}
