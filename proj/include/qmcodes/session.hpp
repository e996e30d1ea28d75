#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "qmcodes/codes.hpp"
#include "qmcodes/correspondence.hpp"
#include "qmcodes/galois_field.hpp"
#include "qmcodes/macwilliams.hpp"
#include "qmcodes/residue_ring.hpp"

namespace qm {

/// A parsed code spec file (schema: docs/code_spec.schema.json).
struct CodeSpec {
  std::int64_t p = 0;
  Quaternion pi;
  std::size_t n = 0;
  std::vector<std::vector<Quaternion>> generators;
  std::optional<Quaternion> alpha_image;
  std::optional<std::vector<std::int64_t>> primitive_poly;
  std::optional<std::uint64_t> budget;
  Pairing pairing = Pairing::form;
};

/// Throws ErrorCode::MalformedSpec for JSON or schema violations, including
/// norm(pi) != p and generator rows of the wrong length.
CodeSpec parse_code_spec(std::string_view json_text);

/// Everything derived from one code spec: ring, partition, field, correspondence
/// and the spanned code. The dual is computed on first use and kept.
class Session {
public:
  explicit Session(CodeSpec spec, DualOptions dual_options = {});

  const CodeSpec& spec() const { return spec_; }
  const std::shared_ptr<const ResidueRing>& ring() const { return ring_; }
  const WeightClassPartition& partition() const { return partition_; }
  const FieldSpec& field() const { return corr_->field(); }
  const Correspondence& correspondence() const { return *corr_; }
  const Code& code() const { return code_; }
  const DualOptions& dual_options() const { return dual_options_; }

  const Code& dual_code();
  Classifier classifier(EnumeratorMode mode) const;

  Enumerator enumerator(EnumeratorMode mode) const;
  Enumerator dual_enumerator(EnumeratorMode mode);
  /// Complete or QI MacWilliams transform of the code's enumerator.
  /// The complete transform is refused with ErrorCode::IntractableSize when
  /// (#terms) * q^n exceeds the budget.
  Enumerator transform(EnumeratorMode mode) const;
  Report verify();
  std::int64_t min_distance() const { return min_qm_distance(code_); }

private:
  CodeSpec spec_;
  DualOptions dual_options_;
  std::shared_ptr<const ResidueRing> ring_;
  WeightClassPartition partition_;
  std::shared_ptr<const Correspondence> corr_;
  Code code_;
  std::optional<Code> dual_;
};

} // namespace qm
