#include "z2s/hadamard.hpp"

#include <functional>
#include <numeric>

#include "z2s/errors.hpp"

namespace z2s {

BinaryCode::BinaryCode(std::size_t length, std::vector<BitVector> words) : length_(length) {
  words_.reserve(words.size());
  index_.reserve(words.size());
  for (auto& w : words) {
    if (w.size() != length) throw ShapeError("code word length differs from code length");
    if (index_.insert(w).second) words_.push_back(std::move(w));
  }
}

bool BinaryCode::has_zero() const { return contains(BitVector(length_)); }

BinaryCode BinaryCode::translated(const BitVector& shift) const {
  std::vector<BitVector> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.push_back(w ^ shift);
  return BinaryCode(length_, std::move(out));
}

TypeSpec::TypeSpec(int s, std::vector<int> counts) : s_(s), counts_(std::move(counts)) {
  if (s < 2) throw InvalidType("type requires s >= 2");
  check_modulus_exponent(s);
  if (counts_.size() != static_cast<std::size_t>(s)) {
    throw InvalidType("type tuple has " + std::to_string(counts_.size()) + " entries, expected s=" +
                      std::to_string(s));
  }
  for (int c : counts_) {
    if (c < 0) throw InvalidType("type entries must be nonnegative");
  }
  if (counts_[0] < 1) throw InvalidType("type requires t_1 >= 1");
  long long weighted = 0;
  for (int k = 1; k <= s; ++k) weighted += static_cast<long long>(s - k + 1) * counts_[static_cast<std::size_t>(k - 1)];
  if (weighted - 1 > 62) throw CapExceeded("type describes a code longer than 2^62");
  t_ = static_cast<int>(weighted - 1);
}

int TypeSpec::tau() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::string TypeSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

TypeSpec make_spec(int s, std::vector<int> counts) { return TypeSpec(s, std::move(counts)); }

void require_within_cap(int t, bool allow_large) {
  if (t > kDefaultMaxT && !allow_large) {
    throw CapExceeded("t=" + std::to_string(t) + " exceeds the default cap of " + std::to_string(kDefaultMaxT) +
                      " (use --allow-large)");
  }
}

void require_within_cap(const TypeSpec& spec, bool allow_large) { require_within_cap(spec.t(), allow_large); }

std::vector<TypeSpec> enumerate_type_specs(int t, int s) {
  std::vector<TypeSpec> out;
  if (t < 1 || s < 2) return out;
  std::vector<int> counts(static_cast<std::size_t>(s), 0);
  // Σ_{k=1}^{s} (s-k+1) t_k = t+1, filled left to right so the output is
  // lexicographic.
  std::function<void(int, int)> fill = [&](int k, int remaining) {
    const int weight = s - k + 1;
    if (k == s) {
      counts[static_cast<std::size_t>(k - 1)] = remaining;  // weight 1 absorbs the rest
      out.emplace_back(s, counts);
      return;
    }
    const int lo = (k == 1) ? 1 : 0;
    for (int c = lo; c * weight <= remaining; ++c) {
      counts[static_cast<std::size_t>(k - 1)] = c;
      fill(k + 1, remaining - c * weight);
    }
  };
  fill(1, t + 1);
  return out;
}

namespace {

// Level k (1-based) of each row after the first, in build order.
std::vector<int> row_levels(const TypeSpec& spec) {
  std::vector<int> levels;
  for (int k = 1; k <= spec.s(); ++k) {
    const int extra = (k == 1) ? spec.count(1) - 1 : spec.count(k);
    for (int r = 0; r < extra; ++r) levels.push_back(k);
  }
  return levels;
}

}  // namespace

GeneratorMatrix generator_direct(const TypeSpec& spec) {
  const int s = spec.s();
  const auto levels = row_levels(spec);
  const std::size_t n = spec.n();
  std::vector<std::vector<std::uint32_t>> rows(levels.size() + 1, std::vector<std::uint32_t>(n, 0));
  std::fill(rows[0].begin(), rows[0].end(), 1U);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t rest = col;
    for (std::size_t r = 0; r < levels.size(); ++r) {
      const int k = levels[r];
      const std::size_t radix = std::size_t{1} << (s - k + 1);
      rows[r + 1][col] = static_cast<std::uint32_t>((rest % radix) << (k - 1));
      rest /= radix;
    }
  }
  GeneratorMatrix gen{spec, {}, {}};
  gen.row_orders.push_back(std::uint64_t{1} << s);
  for (int k : levels) gen.row_orders.push_back(std::uint64_t{1} << (s - k + 1));
  for (auto& r : rows) gen.rows.emplace_back(std::move(r), s);
  return gen;
}

GeneratorMatrix generator_recursive(const TypeSpec& spec) {
  const int s = spec.s();
  std::vector<std::vector<std::uint32_t>> rows{{1U}};
  for (int k : row_levels(spec)) {
    const std::size_t copies = std::size_t{1} << (s - k + 1);
    const std::size_t width = rows.front().size();
    for (auto& row : rows) {
      std::vector<std::uint32_t> wide;
      wide.reserve(width * copies);
      for (std::size_t c = 0; c < copies; ++c) wide.insert(wide.end(), row.begin(), row.end());
      row = std::move(wide);
    }
    std::vector<std::uint32_t> fresh;
    fresh.reserve(width * copies);
    for (std::size_t j = 0; j < copies; ++j) {
      fresh.insert(fresh.end(), width, static_cast<std::uint32_t>(j << (k - 1)));
    }
    rows.push_back(std::move(fresh));
  }
  GeneratorMatrix gen{spec, {}, {}};
  for (auto& r : rows) {
    gen.rows.emplace_back(std::move(r), s);
    gen.row_orders.push_back(vector_order(gen.rows.back()));
  }
  return gen;
}

std::uint64_t codeword_count(const GeneratorMatrix& gen) {
  std::uint64_t total = 1;
  for (auto o : gen.row_orders) total *= o;
  return total;
}

ResidueVector codeword_at(const GeneratorMatrix& gen, std::uint64_t index) {
  ResidueVector c = ResidueVector::zero(gen.length(), gen.spec.s());
  for (std::size_t r = gen.rows.size(); r-- > 0;) {
    const std::uint64_t digit = index % gen.row_orders[r];
    index /= gen.row_orders[r];
    if (digit) c += static_cast<std::int64_t>(digit) * gen.rows[r];
  }
  return c;
}

CodewordStream::CodewordStream(const GeneratorMatrix& gen, std::uint64_t first, std::uint64_t count)
    : gen_(&gen),
      digits_(gen.rows.size(), 0),
      current_(codeword_at(gen, first)),
      remaining_(0) {
  const std::uint64_t total = codeword_count(gen);
  remaining_ = first >= total ? 0 : std::min(count, total - first);
  std::uint64_t index = first;
  for (std::size_t r = gen.rows.size(); r-- > 0;) {
    digits_[r] = index % gen.row_orders[r];
    index /= gen.row_orders[r];
  }
}

bool CodewordStream::next(ResidueVector& out) {
  if (remaining_ == 0) return false;
  if (started_) {
    for (std::size_t r = digits_.size(); r-- > 0;) {
      current_ += gen_->rows[r];
      if (++digits_[r] < gen_->row_orders[r]) break;
      digits_[r] = 0;
    }
  }
  started_ = true;
  --remaining_;
  out = current_;
  return true;
}

int sigma(const TypeSpec& spec) {
  if (spec.count(1) > 1) return 1;
  for (int k = 2; k <= spec.s(); ++k) {
    if (spec.count(k) > 0) return k;
  }
  return spec.s();
}

BinaryCode gray_image(const GeneratorMatrix& gen, const GrayTable& table, bool allow_large) {
  require_within_cap(gen.spec, allow_large);
  check_same_modulus(gen.spec.s(), table.s());
  std::vector<BitVector> words;
  words.reserve(codeword_count(gen));
  for_each_codeword(gen, [&](const ResidueVector& c) { words.push_back(phi_vec(c, table)); });
  return BinaryCode(gen.length() * table.block_length(), std::move(words));
}

}  // namespace z2s
