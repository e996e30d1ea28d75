#include "qmcodes/session.hpp"

#include <algorithm>

#include <json.hpp>

#include "qmcodes/error.hpp"

namespace qm {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedSpec, what); }

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    malformed(where + " must be an integer");
  return j.get<std::int64_t>();
}

Quaternion as_quaternion(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4)
    malformed(where + " must be an array of 4 integers");
  return {as_int(j[0], where + "[0]"), as_int(j[1], where + "[1]"), as_int(j[2], where + "[2]"),
          as_int(j[3], where + "[3]")};
}

} // namespace

CodeSpec parse_code_spec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object())
    malformed("spec must be a JSON object");

  static const std::vector<std::string> known = {"version", "p", "pi", "n", "generators", "alpha_image",
                                                 "primitive_poly", "budget", "pairing"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      malformed("unknown field \"" + key + "\"");
  for (const char* key : {"p", "pi", "n", "generators"})
    if (!j.contains(key))
      malformed(std::string("missing field \"") + key + "\"");
  if (j.contains("version") && as_int(j["version"], "version") != 1)
    malformed("unsupported spec version");

  CodeSpec s;
  s.p = as_int(j["p"], "p");
  s.pi = as_quaternion(j["pi"], "pi");
  if (norm(s.pi) != s.p)
    malformed("norm(pi) = " + std::to_string(norm(s.pi)) + " does not equal p = " + std::to_string(s.p));
  const auto n = as_int(j["n"], "n");
  if (n < 1)
    malformed("n must be positive");
  s.n = static_cast<std::size_t>(n);

  if (!j["generators"].is_array())
    malformed("generators must be an array of rows");
  for (std::size_t r = 0; r < j["generators"].size(); ++r) {
    const auto& row = j["generators"][r];
    const auto where = "generators[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != s.n)
      malformed(where + " must have length n = " + std::to_string(s.n));
    auto& out = s.generators.emplace_back();
    for (std::size_t t = 0; t < row.size(); ++t)
      out.push_back(as_quaternion(row[t], where + "[" + std::to_string(t) + "]"));
  }

  if (j.contains("alpha_image"))
    s.alpha_image = as_quaternion(j["alpha_image"], "alpha_image");
  if (j.contains("primitive_poly")) {
    const auto& poly = j["primitive_poly"];
    if (!poly.is_array() || poly.size() != 3)
      malformed("primitive_poly must be 3 integers (monic quadratic, constant term first)");
    std::vector<std::int64_t> coeffs;
    for (std::size_t t = 0; t < poly.size(); ++t)
      coeffs.push_back(as_int(poly[t], "primitive_poly[" + std::to_string(t) + "]"));
    s.primitive_poly = coeffs;
  }
  if (j.contains("budget")) {
    const auto b = as_int(j["budget"], "budget");
    if (b < 1)
      malformed("budget must be positive");
    s.budget = static_cast<std::uint64_t>(b);
  }
  if (j.contains("pairing")) {
    const auto& v = j["pairing"];
    if (v == "form")
      s.pairing = Pairing::form;
    else if (v == "left_product")
      s.pairing = Pairing::left_product;
    else
      malformed("pairing must be \"form\" or \"left_product\"");
  }
  return s;
}

Session::Session(CodeSpec spec, DualOptions dual_options)
    : spec_(std::move(spec)), dual_options_(dual_options), ring_(ResidueRing::make(spec_.pi)),
      partition_(weight_classes(ring_)),
      corr_(Correspondence::build(FieldSpec::make(spec_.p, 2, spec_.primitive_poly), ring_, spec_.alpha_image)),
      code_([this] {
        std::vector<Word> rows;
        for (const auto& g : spec_.generators) {
          auto& w = rows.emplace_back();
          for (const auto& q : g)
            w.push_back(ring_->index_of(q));
        }
        return Code::span(ring_, spec_.n, rows);
      }()) {
  dual_options_.pairing = spec_.pairing;
}

const Code& Session::dual_code() {
  if (!dual_)
    dual_ = dual(code_, corr_.get(), dual_options_);
  return *dual_;
}

Classifier Session::classifier(EnumeratorMode mode) const {
  return mode == EnumeratorMode::qi ? Classifier::qi(partition_) : Classifier::complete(*corr_);
}

Enumerator Session::enumerator(EnumeratorMode mode) const { return weight_enumerator(code_, classifier(mode)); }

Enumerator Session::dual_enumerator(EnumeratorMode mode) { return weight_enumerator(dual_code(), classifier(mode)); }

Enumerator Session::transform(EnumeratorMode mode) const {
  const auto w = enumerator(mode);
  const auto size = static_cast<std::int64_t>(code_.size());
  if (mode == EnumeratorMode::qi)
    return qi_transform(w, size, qi_kernel(partition_, *corr_));

  const auto q = static_cast<std::uint64_t>(field().q());
  std::uint64_t work = w.terms().size();
  for (std::size_t t = 0; t < spec_.n; ++t)
    if (__builtin_mul_overflow(work, q, &work) || work > dual_options_.budget)
      throw Error(ErrorCode::IntractableSize, "complete transform expands more than " +
                                                  std::to_string(dual_options_.budget) + " products");
  auto out = complete_transform(w, size, complete_kernel(field()));
  out.integer_terms(); // must be rational
  return out;
}

Report Session::verify() {
  VerifyOptions opts;
  opts.dual = dual_options_;
  return verify_duality(code_, partition_, *corr_, opts);
}

} // namespace qm
