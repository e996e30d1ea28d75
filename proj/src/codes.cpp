#include "qmcodes/codes.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>

#include "qmcodes/checked.hpp"
#include "qmcodes/error.hpp"

namespace qm {

namespace {

// p^(2n), or nullopt past 2^63.
std::optional<std::uint64_t> space_size(std::size_t ring_size, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < n; ++t) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(ring_size), &total))
      return std::nullopt;
  }
  return total;
}

// Membership over word keys: a bitmap when the ambient space is small, a hash set otherwise.
class KeySet {
public:
  explicit KeySet(std::optional<std::uint64_t> universe) {
    if (universe && *universe <= (std::uint64_t{1} << 31))
      bits_.assign(*universe, false);
  }
  bool contains(std::uint64_t k) const { return bits_.empty() ? hash_.contains(k) : bits_[k]; }
  void insert(std::uint64_t k) {
    if (bits_.empty())
      hash_.insert(k);
    else
      bits_[k] = true;
  }

private:
  std::vector<bool> bits_;
  std::unordered_set<std::uint64_t> hash_;
};

} // namespace

std::uint64_t Code::encode(const Word& w) const {
  if (w.size() != n_)
    throw Error(ErrorCode::InvalidParams, "word has length " + std::to_string(w.size()) + ", expected " +
                                              std::to_string(n_));
  std::uint64_t key = 0;
  for (std::size_t t = n_; t-- > 0;) {
    if (w[t] >= ring_->size())
      throw Error(ErrorCode::UnknownResidue, "residue index " + std::to_string(w[t]) + " out of range");
    key = key * ring_->size() + w[t];
  }
  return key;
}

Word Code::decode(std::uint64_t key) const {
  Word w(n_);
  for (std::size_t t = 0; t < n_; ++t) {
    w[t] = static_cast<ResidueIndex>(key % ring_->size());
    key /= ring_->size();
  }
  return w;
}

std::vector<std::uint64_t> Code::close_over(const std::vector<Word>& spanning) {
  const auto& ring = *ring_;
  std::vector<std::uint64_t> keys{0};
  KeySet member(space_size(ring.size(), n_));
  member.insert(0);
  basis_.clear();

  Word sum(n_), multiple(n_);
  for (const auto& s : spanning) {
    if (member.contains(encode(s)))
      continue;
    basis_.push_back(s);
    // s is outside the current subgroup, so C + k s for k = 1..p-1 are new cosets.
    const auto base_count = keys.size();
    multiple = s;
    for (std::int64_t k = 1; k < ring.p(); ++k) {
      for (std::size_t i = 0; i < base_count; ++i) {
        const auto w = decode(keys[i]);
        for (std::size_t t = 0; t < n_; ++t)
          sum[t] = ring.add(w[t], multiple[t]);
        const auto key = encode(sum);
        member.insert(key);
        keys.push_back(key);
      }
      for (std::size_t t = 0; t < n_; ++t)
        multiple[t] = ring.add(multiple[t], s[t]);
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool Code::check_left_closed() const {
  if (!additive_closed_)
    return false;
  const auto& ring = *ring_;
  Word image(n_);
  for (const auto& b : basis_)
    for (std::size_t lambda = 0; lambda < ring.size(); ++lambda) {
      for (std::size_t t = 0; t < n_; ++t)
        image[t] = ring.mul(static_cast<ResidueIndex>(lambda), b[t]);
      if (!contains(image))
        return false;
    }
  return true;
}

Code Code::span(std::shared_ptr<const ResidueRing> ring, std::size_t n, const std::vector<Word>& generators) {
  Code c(std::move(ring), n);
  const auto& r = *c.ring_;
  std::vector<Word> spanning;
  for (const auto& g : generators) {
    c.encode(g); // validates length and indices
    for (std::size_t lambda = 0; lambda < r.size(); ++lambda) {
      Word w(n);
      for (std::size_t t = 0; t < n; ++t)
        w[t] = r.mul(static_cast<ResidueIndex>(lambda), g[t]);
      spanning.push_back(std::move(w));
    }
  }
  c.generators_ = generators;
  c.keys_ = c.close_over(spanning);
  c.left_closed_ = c.check_left_closed();
  return c;
}

Code Code::additive_span(std::shared_ptr<const ResidueRing> ring, std::size_t n, const std::vector<Word>& words) {
  Code c(std::move(ring), n);
  for (const auto& w : words)
    c.encode(w);
  c.generators_ = words;
  c.keys_ = c.close_over(words);
  c.left_closed_ = c.check_left_closed();
  return c;
}

Code Code::from_keys(std::shared_ptr<const ResidueRing> ring, std::size_t n, std::vector<std::uint64_t> sorted_keys) {
  Code c(std::move(ring), n);
  std::vector<Word> words;
  words.reserve(sorted_keys.size());
  for (auto k : sorted_keys)
    words.push_back(c.decode(k));
  auto closure = c.close_over(words);
  c.additive_closed_ = closure == sorted_keys;
  c.keys_ = std::move(sorted_keys);
  c.generators_ = c.basis_;
  c.left_closed_ = c.check_left_closed();
  return c;
}

std::vector<Word> Code::words() const {
  std::vector<Word> out;
  out.reserve(keys_.size());
  for (auto k : keys_)
    out.push_back(decode(k));
  return out;
}

bool Code::contains(const Word& w) const { return std::binary_search(keys_.begin(), keys_.end(), encode(w)); }

std::optional<std::size_t> Code::dimension() const {
  std::size_t size = 1, k = 0;
  while (size < keys_.size()) {
    size *= ring_->size();
    ++k;
  }
  if (size != keys_.size())
    return std::nullopt;
  return k;
}

namespace {

bool form_orthogonal(const Word& c, const Word& v, const Correspondence& corr, std::int64_t p) {
  std::int64_t s = 0;
  for (std::size_t t = 0; t < c.size(); ++t)
    s += corr.pairing(c[t], v[t]);
  return s % p == 0;
}

bool product_orthogonal(const Word& c, const Word& v, const ResidueRing& ring) {
  ResidueIndex s = 0;
  for (std::size_t t = 0; t < c.size(); ++t)
    s = ring.add(s, ring.mul(c[t], v[t]));
  return s == 0;
}

} // namespace

Code dual(const Code& code, const Correspondence* corr, const DualOptions& options) {
  const auto& ring = code.ring();
  const auto n = code.length();
  const auto total = space_size(ring.size(), n);
  if (!total || *total > options.budget)
    throw Error(ErrorCode::IntractableSize,
                "dual search over p^(2n) = " + (total ? std::to_string(*total) : std::string("> 2^64")) +
                    " vectors exceeds the budget " + std::to_string(options.budget));
  if (options.pairing == Pairing::form && corr == nullptr)
    throw Error(ErrorCode::InvalidParams, "form pairing needs a correspondence");
  if (corr && &corr->ring() != &ring)
    throw Error(ErrorCode::InvalidParams, "correspondence is built on a different ring");

  // The form pairing is bi-additive, so the basis suffices; the left product is
  // not, so every codeword is checked.
  const std::vector<Word> checks = options.pairing == Pairing::form ? code.basis() : code.words();
  const auto p = ring.p();

  const unsigned jobs = std::max(1u, options.jobs);
  const std::uint64_t chunk = (*total + jobs - 1) / jobs;
  std::vector<std::vector<std::uint64_t>> found(jobs);
  auto worker = [&](unsigned j) {
    const std::uint64_t lo = std::min<std::uint64_t>(*total, j * chunk);
    const std::uint64_t hi = std::min<std::uint64_t>(*total, lo + chunk);
    for (std::uint64_t key = lo; key < hi; ++key) {
      const auto v = code.decode(key);
      bool ok = true;
      for (const auto& c : checks) {
        ok = options.pairing == Pairing::form ? form_orthogonal(c, v, *corr, p) : product_orthogonal(c, v, ring);
        if (!ok)
          break;
      }
      if (ok)
        found[j].push_back(key);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(worker, j);
  }

  std::vector<std::uint64_t> keys;
  for (auto& part : found)
    keys.insert(keys.end(), part.begin(), part.end());
  return Code::from_keys(code.ring_ptr(), n, std::move(keys));
}

bool pairs_to_zero(const Code& code, const Code& other, const Correspondence* corr, Pairing pairing) {
  if (code.length() != other.length())
    return false;
  if (pairing == Pairing::form) {
    if (corr == nullptr)
      throw Error(ErrorCode::InvalidParams, "form pairing needs a correspondence");
    const auto p = code.ring().p();
    for (const auto& c : code.basis())
      for (const auto& v : other.basis())
        if (!form_orthogonal(c, v, *corr, p))
          return false;
    return true;
  }
  for (auto ck : code.keys()) {
    const auto c = code.decode(ck);
    for (auto vk : other.keys())
      if (!product_orthogonal(c, other.decode(vk), code.ring()))
        return false;
  }
  return true;
}

std::int64_t min_qm_distance(const Code& code) {
  if (code.size() < 2)
    throw Error(ErrorCode::EmptyCode, "code has no nonzero word");
  const auto& ring = code.ring();
  std::int64_t best = -1;
  for (std::size_t i = 1; i < code.size(); ++i) {
    std::int64_t w = 0;
    for (auto r : code.word(i))
      w += ring.qm_weight(r);
    if (best < 0 || w < best)
      best = w;
  }
  return best;
}

Classifier Classifier::qi(const WeightClassPartition& partition) {
  return {partition.class_of, partition.num_classes()};
}

Classifier Classifier::complete(const Correspondence& corr) {
  Classifier c;
  c.num_vars = static_cast<std::size_t>(corr.field().q());
  for (std::size_t r = 0; r < corr.ring().size(); ++r)
    c.var_of.push_back(corr.to_field(static_cast<ResidueIndex>(r)));
  return c;
}

Monomial composition(const std::vector<Quaternion>& word, const ResidueRing& ring, const Classifier& classifier) {
  std::vector<std::size_t> vars;
  for (const auto& q : word) {
    auto idx = ring.find(q);
    if (!idx) {
      std::ostringstream os;
      os << q << " is not a canonical residue";
      throw Error(ErrorCode::UnknownResidue, os.str());
    }
    vars.push_back(classifier.var_of[*idx]);
  }
  return composition(vars, classifier.num_vars);
}

Enumerator weight_enumerator(const Code& code, const Classifier& classifier) {
  const auto n = code.length();
  std::map<std::vector<std::size_t>, std::int64_t> counts;
  std::vector<std::size_t> vars(n);
  for (auto key : code.keys()) {
    for (std::size_t t = 0; t < n; ++t) {
      vars[t] = classifier.var_of[key % code.ring().size()];
      key /= code.ring().size();
    }
    std::sort(vars.begin(), vars.end());
    auto it = counts.find(vars);
    if (it == counts.end())
      counts.emplace(vars, 1);
    else
      ++it->second;
  }
  const int order = static_cast<int>(code.ring().p());
  Enumerator e(classifier.num_vars, order);
  for (const auto& [v, count] : counts)
    e.add_term(composition(v, classifier.num_vars), CyclotomicInt(order, count));
  return e;
}

} // namespace qm
