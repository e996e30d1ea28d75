#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qmcodes/correspondence.hpp"
#include "qmcodes/enumerator.hpp"
#include "qmcodes/residue_ring.hpp"

namespace qm {

using Word = std::vector<ResidueIndex>;

/// How a codeword c and a vector v are paired when forming the dual.
enum class Pairing {
  /// sum_t <c_t, v_t> = 0 in Z/p, with the correspondence's bilinear form.
  form,
  /// reduce(sum_t c_t v_t) = 0 on canonical representatives. Not bi-additive in
  /// general; kept for comparison.
  left_product,
};

struct DualOptions {
  Pairing pairing = Pairing::form;
  /// Hard cap on p^(2n), the number of candidate vectors searched.
  std::uint64_t budget = 100'000'000;
  unsigned jobs = 1;
};

/// An additive code of length n over H[Z]_pi.
///
/// Words are stored as mixed-radix keys (base p^2, coordinate 0 least significant),
/// sorted ascending; key 0 is the zero word.
class Code {
public:
  /// Additive closure of { reduce(lambda g) : lambda a residue, g a generator row }.
  static Code span(std::shared_ptr<const ResidueRing> ring, std::size_t n,
                   const std::vector<Word>& generators);
  /// Additive closure of the given words (no left scalar multiples).
  static Code additive_span(std::shared_ptr<const ResidueRing> ring, std::size_t n,
                            const std::vector<Word>& words);
  /// Exactly the given words (ascending keys). The set need not be additively
  /// closed; additive_closed() reports whether it is.
  static Code from_keys(std::shared_ptr<const ResidueRing> ring, std::size_t n,
                        std::vector<std::uint64_t> sorted_keys);

  const ResidueRing& ring() const { return *ring_; }
  const std::shared_ptr<const ResidueRing>& ring_ptr() const { return ring_; }
  std::size_t length() const { return n_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<Word>& generators() const { return generators_; }
  /// An F_p-basis of the code as an additive group.
  const std::vector<Word>& basis() const { return basis_; }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  bool left_closed() const { return left_closed_; }
  bool additive_closed() const { return additive_closed_; }

  Word word(std::size_t i) const { return decode(keys_[i]); }
  std::vector<Word> words() const;
  bool contains(const Word& w) const;

  std::uint64_t encode(const Word& w) const;
  Word decode(std::uint64_t key) const;

  /// log_{p^2} |C| when integral.
  std::optional<std::size_t> dimension() const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.n_ == b.n_ && a.keys_ == b.keys_;
  }

private:
  Code(std::shared_ptr<const ResidueRing> ring, std::size_t n) : ring_(std::move(ring)), n_(n) {}
  std::vector<std::uint64_t> close_over(const std::vector<Word>& spanning);
  bool check_left_closed() const;

  std::shared_ptr<const ResidueRing> ring_;
  std::size_t n_ = 0;
  std::vector<Word> generators_;
  std::vector<Word> basis_;
  std::vector<std::uint64_t> keys_;
  bool left_closed_ = false;
  bool additive_closed_ = true;
};

/// Brute-force dual: every v in ring^n pairing to zero with every codeword.
/// Throws ErrorCode::IntractableSize when p^(2n) exceeds options.budget.
/// `corr` is required for Pairing::form.
Code dual(const Code& code, const Correspondence* corr, const DualOptions& options = {});

/// True when every pair (c, v) pairs to zero.
bool pairs_to_zero(const Code& code, const Code& other, const Correspondence* corr,
                   Pairing pairing);

/// Minimum QM weight over nonzero words. Throws ErrorCode::EmptyCode.
std::int64_t min_qm_distance(const Code& code);

/// Maps residues to enumerator variables.
struct Classifier {
  std::vector<std::size_t> var_of; // residue index -> variable
  std::size_t num_vars = 0;

  /// QI mode: variable = weight class.
  static Classifier qi(const WeightClassPartition& partition);
  /// Complete mode: variable = field element index of phi^{-1}(r).
  static Classifier complete(const Correspondence& corr);
};

enum class EnumeratorMode { complete, qi };

/// Composition of a word given as quaternions. Throws ErrorCode::UnknownResidue if a
/// coordinate is not a canonical residue.
Monomial composition(const std::vector<Quaternion>& word, const ResidueRing& ring,
                     const Classifier& classifier);

/// sum over codewords of their composition monomial.
Enumerator weight_enumerator(const Code& code, const Classifier& classifier);

} // namespace qm
