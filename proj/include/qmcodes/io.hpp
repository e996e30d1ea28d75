#pragma once

#include <string>
#include <string_view>

#include "qmcodes/correspondence.hpp"
#include "qmcodes/enumerator.hpp"
#include "qmcodes/macwilliams.hpp"
#include "qmcodes/residue_ring.hpp"

// JSON and text renderings. JSON output is deterministic (fixed key order,
// two-space indent).
namespace qm::io {

std::string residues_json(const ResidueRing& ring);
std::string residues_text(const ResidueRing& ring);

std::string classes_json(const WeightClassPartition& partition);
std::string classes_text(const WeightClassPartition& partition);

std::string correspondence_json(const Correspondence& corr);

/// {"vars": n, "terms": [{"exp": [...], "coeff": int}]}; irrational coefficients
/// are written as {"p": p, "coeffs": [...]}.
std::string enumerator_json(const Enumerator& e);
Enumerator parse_enumerator_json(std::string_view text, int order);

std::string cyclotomic_json(const CyclotomicInt& c);
std::string kernel_json(const Kernel& k);

std::string report_json(const Report& r);
std::string report_text(const Report& r);

} // namespace qm::io
