#include "z2s/equivalence.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>

#include "z2s/errors.hpp"
#include "z2s/invariants.hpp"

namespace z2s {

const char* to_string(EquivalenceOutcome outcome) {
  switch (outcome) {
    case EquivalenceOutcome::equivalent:
      return "equivalent";
    case EquivalenceOutcome::inequivalent:
      return "inequivalent";
    case EquivalenceOutcome::unknown:
      return "unknown";
  }
  return "unknown";
}

std::map<std::size_t, std::size_t> distance_distribution(const BinaryCode& code) {
  std::map<std::size_t, std::size_t> census;
  const auto& words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) ++census[words[i].distance(words[j])];
  }
  return census;
}

BinaryCode apply_witness(const BinaryCode& a, const EquivalenceWitness& witness) {
  if (witness.permutation.size() != a.length() || witness.translation.size() != a.length()) {
    throw ShapeError("witness does not match the code length");
  }
  std::vector<BitVector> out;
  out.reserve(a.size());
  for (const auto& c : a.words()) {
    BitVector img = witness.translation;
    for_each_set_bit(c, [&](std::size_t i) { img.flip(witness.permutation[i]); });
    out.push_back(std::move(img));
  }
  return BinaryCode(a.length(), std::move(out));
}

bool verify_witness(const BinaryCode& a, const BinaryCode& b, const EquivalenceWitness& witness) {
  if (a.length() != b.length() || a.size() != b.size()) return false;
  std::vector<bool> seen(a.length(), false);
  for (auto p : witness.permutation) {
    if (p >= a.length() || seen[p]) return false;
    seen[p] = true;
  }
  const BinaryCode image = apply_witness(a, witness);
  if (image.size() != b.size()) return false;
  return std::all_of(image.words().begin(), image.words().end(), [&](const BitVector& w) { return b.contains(w); });
}

namespace {

using Clock = std::chrono::steady_clock;

// Word/coordinate incidence of a code, kept both row-wise and column-wise.
struct Incidence {
  const BinaryCode* code;
  std::vector<BitVector> columns;  // column j has bit w set iff word w has coordinate j set

  explicit Incidence(const BinaryCode& c) : code(&c), columns(c.length(), BitVector(c.size())) {
    for (std::size_t w = 0; w < c.size(); ++w) {
      for_each_set_bit(c.words()[w], [&](std::size_t j) { columns[j].set(w); });
    }
  }
  std::size_t word_count() const { return code->size(); }
  std::size_t coord_count() const { return code->length(); }
};

// Colors of words and coordinates on both sides. Ids are shared between the
// two sides so equal ids mean "may correspond".
struct Coloring {
  std::vector<int> words_a, words_b, coords_a, coords_b;
};

using Signature = std::uint64_t;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Relabels both sides from their signatures with ids ordered by signature.
// Returns false if the two sides have different color histograms.
bool relabel(const std::vector<Signature>& sig_a, const std::vector<Signature>& sig_b, std::vector<int>& out_a,
             std::vector<int>& out_b) {
  std::vector<Signature> sorted_a = sig_a;
  std::vector<Signature> sorted_b = sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;
  sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
  auto id = [&](Signature sig) {
    return static_cast<int>(std::lower_bound(sorted_a.begin(), sorted_a.end(), sig) - sorted_a.begin());
  };
  for (std::size_t i = 0; i < sig_a.size(); ++i) out_a[i] = id(sig_a[i]);
  for (std::size_t i = 0; i < sig_b.size(); ++i) out_b[i] = id(sig_b[i]);
  return true;
}

int distinct(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

class PermutationSearch {
 public:
  // `local_limit` caps this search only; `max_nodes` caps the shared total.
  PermutationSearch(const Incidence& a, const Incidence& b, Clock::time_point deadline, std::uint64_t max_nodes,
                    std::uint64_t local_limit, std::uint64_t& nodes, std::mt19937_64* rng = nullptr)
      : a_(a), b_(b), deadline_(deadline), max_nodes_(max_nodes), local_limit_(local_limit), nodes_(nodes), rng_(rng) {}

  /// Set when a limit cut the search short, so a miss proves nothing.
  bool exhausted() const { return exhausted_; }
  bool global_exhausted() const { return global_exhausted_; }

  // Initial colors: words by weight, coordinates by (column weight, multiset
  // of AND-counts with every other column).
  std::optional<Coloring> initial_coloring() const {
    Coloring c;
    c.words_a.resize(a_.word_count());
    c.words_b.resize(b_.word_count());
    c.coords_a.resize(a_.coord_count());
    c.coords_b.resize(b_.coord_count());
    auto word_sigs = [](const Incidence& inc) {
      std::vector<Signature> sigs;
      for (const auto& w : inc.code->words()) sigs.push_back(w.weight());
      return sigs;
    };
    auto coord_sigs = [](const Incidence& inc) {
      std::vector<Signature> sigs(inc.coord_count());
      for (std::size_t i = 0; i < inc.coord_count(); ++i) {
        Signature profile = mix(inc.columns[i].weight());
        for (std::size_t j = 0; j < inc.coord_count(); ++j) {
          if (j != i) profile += mix(inc.columns[i].and_count(inc.columns[j]) + 0x5bd1e995ULL);
        }
        sigs[i] = profile;
      }
      return sigs;
    };
    if (!relabel(word_sigs(a_), word_sigs(b_), c.words_a, c.words_b)) return std::nullopt;
    if (!relabel(coord_sigs(a_), coord_sigs(b_), c.coords_a, c.coords_b)) return std::nullopt;
    return c;
  }

  std::optional<std::vector<std::size_t>> search(Coloring c) {
    if (++nodes_ > max_nodes_ || Clock::now() > deadline_) {
      exhausted_ = global_exhausted_ = true;
      return std::nullopt;
    }
    if (++local_nodes_ > local_limit_) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (!refine(c)) return std::nullopt;

    // Target the smallest nontrivial coordinate cell.
    const int colors = distinct(c.coords_a);
    std::vector<std::vector<std::size_t>> cells_a(static_cast<std::size_t>(colors));
    std::vector<std::vector<std::size_t>> cells_b(static_cast<std::size_t>(colors));
    for (std::size_t i = 0; i < c.coords_a.size(); ++i) cells_a[static_cast<std::size_t>(c.coords_a[i])].push_back(i);
    for (std::size_t j = 0; j < c.coords_b.size(); ++j) cells_b[static_cast<std::size_t>(c.coords_b[j])].push_back(j);
    std::size_t target = cells_a.size();
    for (std::size_t k = 0; k < cells_a.size(); ++k) {
      if (cells_a[k].size() > 1 && (target == cells_a.size() || cells_a[k].size() < cells_a[target].size())) {
        target = k;
      }
    }
    if (target == cells_a.size()) {
      std::vector<std::size_t> perm(c.coords_a.size());
      for (std::size_t k = 0; k < cells_a.size(); ++k) perm[cells_a[k].front()] = cells_b[k].front();
      if (maps_onto(perm)) return perm;
      return std::nullopt;
    }

    // Branch order only affects speed; with an rng it is shuffled per call.
    std::size_t x = cells_a[target].front();
    auto& candidates = cells_b[target];
    if (rng_) {
      x = cells_a[target][(*rng_)() % cells_a[target].size()];
      std::shuffle(candidates.begin(), candidates.end(), *rng_);
    }
    for (std::size_t y : candidates) {
      Coloring next = c;
      next.coords_a[x] = colors;
      next.coords_b[y] = colors;
      if (auto found = search(std::move(next))) return found;
      if (exhausted_) return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  bool refine(Coloring& c) const {
    int before = distinct(c.words_a) + distinct(c.coords_a);
    while (true) {
      if (!relabel(coord_signatures(a_, c.coords_a, c.words_a), coord_signatures(b_, c.coords_b, c.words_b),
                   c.coords_a, c.coords_b)) {
        return false;
      }
      if (!relabel(word_signatures(a_, c.words_a, c.coords_a), word_signatures(b_, c.words_b, c.coords_b),
                   c.words_a, c.words_b)) {
        return false;
      }
      const int after = distinct(c.words_a) + distinct(c.coords_a);
      if (after == before) return true;
      before = after;
    }
  }

  // Multiset signatures as sums of mixed colors; the own color is folded in
  // separately so refinement never merges cells.
  static std::vector<Signature> coord_signatures(const Incidence& inc, const std::vector<int>& coords,
                                                 const std::vector<int>& words) {
    std::vector<Signature> sigs(inc.coord_count());
    for (std::size_t j = 0; j < inc.coord_count(); ++j) {
      Signature sum = 0;
      for_each_set_bit(inc.columns[j], [&](std::size_t w) { sum += mix(static_cast<std::uint64_t>(words[w])); });
      sigs[j] = mix(sum ^ mix(static_cast<std::uint64_t>(coords[j]) << 32));
    }
    return sigs;
  }

  static std::vector<Signature> word_signatures(const Incidence& inc, const std::vector<int>& words,
                                                const std::vector<int>& coords) {
    std::vector<Signature> sigs(inc.word_count());
    for (std::size_t w = 0; w < inc.word_count(); ++w) {
      Signature sum = 0;
      for_each_set_bit(inc.code->words()[w], [&](std::size_t j) { sum += mix(static_cast<std::uint64_t>(coords[j])); });
      sigs[w] = mix(sum ^ mix(static_cast<std::uint64_t>(words[w]) << 32));
    }
    return sigs;
  }

  bool maps_onto(const std::vector<std::size_t>& perm) const {
    const std::size_t len = a_.coord_count();
    for (const auto& c : a_.code->words()) {
      BitVector img(len);
      for_each_set_bit(c, [&](std::size_t i) { img.set(perm[i]); });
      if (!b_.code->contains(img)) return false;
    }
    return true;
  }

  const Incidence& a_;
  const Incidence& b_;
  Clock::time_point deadline_;
  std::uint64_t max_nodes_;
  std::uint64_t local_limit_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t& nodes_;
  std::mt19937_64* rng_;
  bool exhausted_ = false;
  bool global_exhausted_ = false;
};

// One representative per coset of the kernel inside the code, zero first.
std::vector<BitVector> translation_candidates(const BinaryCode& b, const BinaryCode& kernel_b) {
  std::unordered_set<BitVector, BitVectorHash> covered;
  std::vector<BitVector> reps{BitVector(b.length())};
  for (const auto& k : kernel_b.words()) covered.insert(k);
  for (const auto& w : b.words()) {
    if (covered.contains(w)) continue;
    reps.push_back(w);
    for (const auto& k : kernel_b.words()) covered.insert(w ^ k);
  }
  return reps;
}

EquivalenceVerdict separated(std::string invariant) {
  EquivalenceVerdict v;
  v.outcome = EquivalenceOutcome::inequivalent;
  v.separating_invariant = std::move(invariant);
  return v;
}

}  // namespace

EquivalenceVerdict equivalence_search(const BinaryCode& a, const BinaryCode& b, const EquivalenceBudget& budget) {
  if (a.length() != b.length()) return separated("length");
  if (a.size() != b.size()) return separated("size");
  if (!a.has_zero() || !b.has_zero()) {
    throw PreconditionError("equivalence search requires both codes to contain the zero word");
  }
  if (distance_distribution(a) != distance_distribution(b)) return separated("distance_distribution");
  const BinaryCode kernel_a = kernel_bruteforce(a);
  const BinaryCode kernel_b = kernel_bruteforce(b);
  if (kernel_a.size() != kernel_b.size()) return separated("kernel_dim");
  if (rank(a) != rank(b)) return separated("rank");

  const auto deadline = Clock::now() + budget.time;
  const Incidence inc_a(a);
  const auto weights_a = weight_distribution(a);
  EquivalenceVerdict verdict;

  // Translations still in play with their starting colorings. Searches are
  // interleaved under a growing per-translation node limit so one hard
  // refutation cannot starve the others.
  struct Pending {
    BitVector shift;
    Coloring start;
  };
  std::vector<Pending> pending;
  for (const auto& shift : translation_candidates(b, kernel_b)) {
    if (Clock::now() > deadline) {
      verdict.outcome = EquivalenceOutcome::unknown;
      return verdict;
    }
    const BinaryCode shifted = b.translated(shift);
    if (weight_distribution(shifted) != weights_a) continue;
    const Incidence inc_b(shifted);
    auto start = PermutationSearch(inc_a, inc_b, deadline, budget.max_nodes, 0, verdict.nodes).initial_coloring();
    if (start) pending.push_back({shift, std::move(*start)});
  }

  std::vector<bool> started(pending.size(), false);
  std::mt19937_64 rng(0x5eed);
  for (std::uint64_t limit = 64; !pending.empty(); limit *= 2) {
    std::vector<Pending> survivors;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      auto& p = pending[i];
      if (!started[i]) {
        started[i] = true;
        ++verdict.translations_tried;
      }
      const BinaryCode shifted = b.translated(p.shift);
      const Incidence inc_b(shifted);
      PermutationSearch search(inc_a, inc_b, deadline, budget.max_nodes, limit, verdict.nodes, &rng);
      auto perm = search.search(p.start);
      if (perm) {
        EquivalenceWitness witness{p.shift, std::move(*perm)};
        if (!verify_witness(a, b, witness)) {
          throw VerificationError("equivalence witness failed replay");
        }
        verdict.outcome = EquivalenceOutcome::equivalent;
        verdict.witness = std::move(witness);
        return verdict;
      }
      if (search.global_exhausted()) {
        verdict.outcome = EquivalenceOutcome::unknown;
        return verdict;
      }
      if (search.exhausted()) survivors.push_back(std::move(p));
    }
    pending = std::move(survivors);
    started.assign(pending.size(), true);
  }
  verdict.outcome = EquivalenceOutcome::inequivalent;
  verdict.separating_invariant = "exhaustive_search";
  return verdict;
}

}  // namespace z2s
