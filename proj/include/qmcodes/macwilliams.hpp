#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmcodes/codes.hpp"
#include "qmcodes/correspondence.hpp"
#include "qmcodes/enumerator.hpp"
#include "qmcodes/residue_ring.hpp"

namespace qm {

enum class KernelMode { complete, qi };

/// How QI kernel entries are formed from the class representatives.
enum class KernelRule {
  /// sum over x in class s of xi^<omega_t, x>
  form,
  /// sum over x in class s of psi(reduce(omega_t x)); class-invariant only for small p
  left_product,
};

/// MacWilliams substitution matrix: z_t -> sum_s entries[t][s] z_s.
struct Kernel {
  KernelMode mode = KernelMode::qi;
  std::vector<std::vector<CyclotomicInt>> entries;

  std::size_t size() const { return entries.size(); }
  bool is_rational() const;
  /// Integer matrix; throws ErrorCode::NotRational naming the first bad (t, s).
  std::vector<std::vector<std::int64_t>> integer_entries() const;
  /// First irrational entry, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_irrational() const;
};

/// entries[t][s] = chi_1(omega_t omega_s) over field element indices.
Kernel complete_kernel(const FieldSpec& field);

Kernel qi_kernel(const WeightClassPartition& partition, const Correspondence& corr,
                 KernelRule rule = KernelRule::form);

/// True when recomputing each row t from any member of class t (instead of omega_t)
/// reproduces the row.
bool kernel_class_invariant(const WeightClassPartition& partition, const Correspondence& corr,
                            KernelRule rule = KernelRule::form);

/// K * K, exact.
std::vector<std::vector<CyclotomicInt>> kernel_square(const Kernel& k);

/// substitute(W, complete kernel, |C|).
Enumerator complete_transform(const Enumerator& w, std::int64_t code_size, const Kernel& kernel);

/// substitute(W, qi kernel, |C|), then require nonnegative rational integers.
/// Throws ErrorCode::InexactDivision, ErrorCode::NotRational,
/// ErrorCode::NegativeCoefficient.
Enumerator qi_transform(const Enumerator& w, std::int64_t code_size, const Kernel& kernel);
Enumerator qi_transform(const Enumerator& w, std::int64_t code_size, SubstitutionCache& cache);

struct VerifyOptions {
  DualOptions dual;
  KernelRule rule = KernelRule::form;
  /// Optional memo for repeated verification under one kernel; must have been
  /// built from qi_kernel(partition, corr, rule).
  SubstitutionCache* cache = nullptr;
};

struct Report {
  Enumerator primal;      // QI enumerator of C
  Enumerator dual_direct; // QI enumerator of the brute-force dual
  Enumerator transformed; // qi_transform of primal
  bool equal = false;
  std::string failure;    // error name when the transform itself threw
  std::size_t code_size = 0;
  std::size_t dual_size = 0;
  bool size_identity = false;
  bool left_closed = false;
  bool dual_left_closed = false;
  bool kernel_rational = false;
  bool kernel_class_invariant = false;
  Kernel kernel;
};

/// Brute-force dual, its QI enumerator, and the MacWilliams image of the primal
/// enumerator, compared term by term.
Report verify_duality(const Code& code, const WeightClassPartition& partition,
                      const Correspondence& corr, const VerifyOptions& options = {});

} // namespace qm
