#include "qmcodes/io.hpp"

#include <sstream>

#include <json.hpp>

#include "qmcodes/error.hpp"

namespace qm::io {

namespace {

using ojson = nlohmann::ordered_json;

ojson quat(const Quaternion& q) { return ojson::array({q.a0, q.a1, q.a2, q.a3}); }

ojson cyc(const CyclotomicInt& c) {
  ojson j;
  j["p"] = c.order();
  j["coeffs"] = c.coeffs();
  return j;
}

ojson coeff(const CyclotomicInt& c) {
  if (auto v = c.as_integer())
    return *v;
  return cyc(c);
}

ojson enumerator(const Enumerator& e) {
  ojson j;
  j["vars"] = e.num_vars();
  j["terms"] = ojson::array();
  for (const auto& [m, c] : e.terms()) {
    ojson t;
    t["exp"] = m;
    t["coeff"] = coeff(c);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

ojson kernel(const Kernel& k) {
  ojson rows = ojson::array();
  for (const auto& row : k.entries) {
    ojson r = ojson::array();
    for (const auto& e : row)
      r.push_back(coeff(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string residues_json(const ResidueRing& ring) {
  ojson j;
  j["p"] = ring.p();
  j["pi"] = quat(ring.modulus().pi);
  j["residues"] = ojson::array();
  for (const auto& r : ring.residues())
    j["residues"].push_back(quat(r));
  return dump(j);
}

std::string residues_text(const ResidueRing& ring) {
  std::ostringstream os;
  os << "H[Z]_pi, pi = " << ring.modulus().pi << ", p = " << ring.p() << ": " << ring.size() << " residues\n";
  for (std::size_t r = 0; r < ring.size(); ++r)
    os << r << ' ' << ring.at(static_cast<ResidueIndex>(r)) << " w=" << ring.qm_weight(static_cast<ResidueIndex>(r))
       << '\n';
  return os.str();
}

std::string classes_json(const WeightClassPartition& partition) {
  const auto& ring = *partition.ring;
  ojson j;
  j["p"] = ring.p();
  j["pi"] = quat(ring.modulus().pi);
  j["m"] = partition.m();
  j["classes"] = ojson::array();
  for (const auto& cls : partition.classes) {
    ojson c = ojson::array();
    for (auto r : cls)
      c.push_back(quat(ring.at(r)));
    j["classes"].push_back(std::move(c));
  }
  j["reps"] = ojson::array();
  for (auto r : partition.reps)
    j["reps"].push_back(quat(ring.at(r)));
  j["right_orbits_agree"] = partition.right_orbits_agree;
  j["multiplication_well_defined"] = partition.multiplication_well_defined;
  return dump(j);
}

std::string classes_text(const WeightClassPartition& partition) {
  const auto& ring = *partition.ring;
  std::ostringstream os;
  os << "p = " << ring.p() << ", m = " << partition.m() << " nonzero classes\n";
  for (std::size_t t = 0; t < partition.num_classes(); ++t) {
    os << 'G' << t << " omega=" << ring.at(partition.reps[t]) << ':';
    for (auto r : partition.classes[t])
      os << ' ' << ring.at(r);
    os << '\n';
  }
  os << "right orbits agree: " << yes_no(partition.right_orbits_agree) << '\n';
  os << "residue multiplication independent of representative: " << yes_no(partition.multiplication_well_defined) << '\n';
  return os.str();
}

std::string correspondence_json(const Correspondence& corr) {
  const auto& field = corr.field();
  const auto& ring = corr.ring();
  ojson j;
  j["primitive_poly"] = field.primitive_poly();
  j["alpha_image"] = quat(ring.at(corr.alpha_image()));
  j["table"] = ojson::array();
  for (std::size_t x = 0; x < static_cast<std::size_t>(field.q()); ++x)
    j["table"].push_back(ojson::array({field.element(x).coeffs, quat(ring.at(corr.to_ring(x)))}));
  return dump(j);
}

std::string enumerator_json(const Enumerator& e) { return dump(enumerator(e)); }

Enumerator parse_enumerator_json(std::string_view text, int order) {
  try {
    const auto j = nlohmann::json::parse(text);
    Enumerator e(j.at("vars").get<std::size_t>(), order);
    for (const auto& t : j.at("terms")) {
      const auto exp = t.at("exp").get<Monomial>();
      const auto& c = t.at("coeff");
      if (c.is_number_integer()) {
        e.add_term(exp, CyclotomicInt(order, c.get<std::int64_t>()));
      } else {
        const auto coeffs = c.at("coeffs").get<std::vector<std::int64_t>>();
        e.add_term(exp, CyclotomicInt::from_exponent_counts(c.at("p").get<int>(), coeffs));
      }
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::MalformedSpec, std::string("enumerator JSON: ") + ex.what());
  }
}

std::string cyclotomic_json(const CyclotomicInt& c) { return cyc(c).dump(); }

std::string kernel_json(const Kernel& k) { return dump(kernel(k)); }

std::string report_json(const Report& r) {
  ojson j;
  j["verdict"] = r.equal ? "equal" : "unequal";
  j["code_size"] = r.code_size;
  j["dual_size"] = r.dual_size;
  j["size_identity"] = r.size_identity;
  j["left_closed"] = r.left_closed;
  j["dual_left_closed"] = r.dual_left_closed;
  j["kernel_rational"] = r.kernel_rational;
  j["kernel_class_invariant"] = r.kernel_class_invariant;
  if (!r.failure.empty())
    j["failure"] = r.failure;
  j["kernel"] = kernel(r.kernel);
  j["primal"] = enumerator(r.primal);
  j["dual"] = enumerator(r.dual_direct);
  j["transformed"] = r.failure.empty() ? enumerator(r.transformed) : ojson(nullptr);
  return dump(j);
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "verdict: " << (r.equal ? "equal" : "unequal") << '\n';
  if (!r.failure.empty())
    os << "transform failed: " << r.failure << '\n';
  os << "|C| = " << r.code_size << ", |C dual| = " << r.dual_size
     << ", size identity: " << yes_no(r.size_identity) << '\n';
  os << "left closed: " << yes_no(r.left_closed) << " (dual: " << yes_no(r.dual_left_closed) << ")\n";
  os << "kernel rational: " << yes_no(r.kernel_rational)
     << ", class invariant: " << yes_no(r.kernel_class_invariant) << '\n';
  os << "W_C        = " << r.primal.to_string() << '\n';
  os << "W_dual     = " << r.dual_direct.to_string() << '\n';
  os << "MacWilliams = " << (r.failure.empty() ? r.transformed.to_string() : std::string("-")) << '\n';
  return os.str();
}

} // namespace qm::io
