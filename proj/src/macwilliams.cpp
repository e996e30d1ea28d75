#include "qmcodes/macwilliams.hpp"

#include <algorithm>
#include <string>

#include "qmcodes/error.hpp"

namespace qm {

bool Kernel::is_rational() const { return !first_irrational().has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> Kernel::first_irrational() const {
  for (std::size_t t = 0; t < entries.size(); ++t)
    for (std::size_t s = 0; s < entries[t].size(); ++s)
      if (!entries[t][s].is_rational())
        return std::pair{t, s};
  return std::nullopt;
}

std::vector<std::vector<std::int64_t>> Kernel::integer_entries() const {
  if (auto bad = first_irrational())
    throw Error(ErrorCode::NotRational, "kernel entry (" + std::to_string(bad->first) + ", " +
                                            std::to_string(bad->second) + ") = " +
                                            entries[bad->first][bad->second].to_string());
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : entries) {
    auto& r = out.emplace_back();
    for (const auto& e : row)
      r.push_back(*e.as_integer());
  }
  return out;
}

Kernel complete_kernel(const FieldSpec& field) {
  const auto q = static_cast<std::size_t>(field.q());
  Kernel k{KernelMode::complete, {}};
  k.entries.resize(q);
  for (std::size_t t = 0; t < q; ++t)
    for (std::size_t s = 0; s < q; ++s)
      k.entries[t].push_back(field.chi1(field.mul(t, s)));
  return k;
}

namespace {

std::vector<CyclotomicInt> kernel_row(ResidueIndex omega, const WeightClassPartition& partition,
                                      const Correspondence& corr, KernelRule rule) {
  const auto& ring = *partition.ring;
  const auto p = ring.p();
  std::vector<CyclotomicInt> row;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p));
  for (const auto& cls : partition.classes) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto x : cls) {
      const auto e = rule == KernelRule::form ? corr.pairing(omega, x) : corr.psi_exponent(ring.mul(omega, x));
      ++counts[static_cast<std::size_t>(e)];
    }
    row.push_back(CyclotomicInt::from_exponent_counts(static_cast<int>(p), counts));
  }
  return row;
}

void require_same_ring(const WeightClassPartition& partition, const Correspondence& corr) {
  if (partition.ring.get() != &corr.ring())
    throw Error(ErrorCode::InvalidParams, "partition and correspondence are built on different rings");
}

} // namespace

Kernel qi_kernel(const WeightClassPartition& partition, const Correspondence& corr, KernelRule rule) {
  require_same_ring(partition, corr);
  Kernel k{KernelMode::qi, {}};
  for (auto omega : partition.reps)
    k.entries.push_back(kernel_row(omega, partition, corr, rule));
  return k;
}

bool kernel_class_invariant(const WeightClassPartition& partition, const Correspondence& corr, KernelRule rule) {
  require_same_ring(partition, corr);
  for (std::size_t t = 1; t < partition.num_classes(); ++t) {
    const auto reference = kernel_row(partition.reps[t], partition, corr, rule);
    for (auto c : partition.classes[t])
      if (kernel_row(c, partition, corr, rule) != reference)
        return false;
  }
  return true;
}

std::vector<std::vector<CyclotomicInt>> kernel_square(const Kernel& k) {
  const auto n = k.size();
  const int order = n ? k.entries[0][0].order() : 0;
  std::vector<std::vector<CyclotomicInt>> out(n, std::vector<CyclotomicInt>(n, CyclotomicInt(order, 0)));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t r = 0; r < n; ++r)
        out[t][r] += k.entries[t][s] * k.entries[s][r];
  return out;
}

Enumerator complete_transform(const Enumerator& w, std::int64_t code_size, const Kernel& kernel) {
  if (kernel.mode != KernelMode::complete)
    throw Error(ErrorCode::InvalidParams, "complete_transform needs a complete kernel");
  return w.substitute(kernel.entries, code_size);
}

namespace {

Enumerator require_counts(Enumerator e) {
  for (const auto& [m, c] : e.integer_terms())
    if (c < 0)
      throw Error(ErrorCode::NegativeCoefficient, "transformed enumerator has coefficient " + std::to_string(c));
  return e;
}

} // namespace

Enumerator qi_transform(const Enumerator& w, std::int64_t code_size, const Kernel& kernel) {
  if (kernel.mode != KernelMode::qi)
    throw Error(ErrorCode::InvalidParams, "qi_transform needs a QI kernel");
  return require_counts(w.substitute(kernel.entries, code_size));
}

Enumerator qi_transform(const Enumerator& w, std::int64_t code_size, SubstitutionCache& cache) {
  return require_counts(cache.apply(w, code_size));
}

Report verify_duality(const Code& code, const WeightClassPartition& partition, const Correspondence& corr,
                      const VerifyOptions& options) {
  require_same_ring(partition, corr);
  Report r;
  const auto d = dual(code, &corr, options.dual);
  const auto classifier = Classifier::qi(partition);

  r.primal = weight_enumerator(code, classifier);
  r.dual_direct = weight_enumerator(d, classifier);
  r.code_size = code.size();
  r.dual_size = d.size();
  r.left_closed = code.left_closed();
  r.dual_left_closed = d.left_closed();

  std::size_t ambient = 1;
  for (std::size_t t = 0; t < code.length(); ++t)
    ambient *= code.ring().size();
  r.size_identity = r.code_size * r.dual_size == ambient;

  r.kernel = qi_kernel(partition, corr, options.rule);
  r.kernel_rational = r.kernel.is_rational();
  r.kernel_class_invariant = kernel_class_invariant(partition, corr, options.rule);

  try {
    const auto size = static_cast<std::int64_t>(r.code_size);
    r.transformed = options.cache ? qi_transform(r.primal, size, *options.cache)
                                  : qi_transform(r.primal, size, r.kernel);
    r.equal = r.transformed == r.dual_direct;
  } catch (const Error& e) {
    switch (e.code()) {
    case ErrorCode::InexactDivision:
    case ErrorCode::NotRational:
    case ErrorCode::NegativeCoefficient:
      r.failure = std::string(error_name(e.code()));
      r.equal = false;
      break;
    default:
      throw;
    }
  }
  return r;
}

} // namespace qm
