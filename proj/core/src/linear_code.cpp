#include "ciskit/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>

#include "ciskit/error.hpp"
#include "parallel.hpp"

namespace ciskit {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(BitMatrix generator) : generator_(std::move(generator)), echelon_(rref(generator_)) {
  if (echelon_.rank() != generator_.rows()) {
    raise(Errc::NotFullRank, "generator rows are linearly dependent");
  }
  const std::size_t k = generator_.rows();
  bool leading = true;
  for (std::size_t i = 0; i < k; ++i) {
    leading = leading && echelon_.pivots[i] == i;
  }
  if (leading) {
    systematic_ = echelon_.reduced;
  }
}

LinearCode LinearCode::span_of(const BitMatrix& rows) {
  EchelonForm e = rref(rows);
  std::vector<std::size_t> keep(e.rank());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    keep[i] = i;
  }
  return LinearCode(e.reduced.select_rows(keep));
}

LinearCode LinearCode::systematic(const BitMatrix& a) {
  if (!a.is_square()) {
    raise(Errc::DimensionMismatch, "systematic: A must be square");
  }
  return LinearCode(BitMatrix::identity(a.rows()).hconcat(a));
}

std::optional<BitMatrix> LinearCode::right_block() const {
  if (!systematic_ || 2 * dimension() != length()) {
    return std::nullopt;
  }
  return systematic_->column_block(dimension(), dimension());
}

bool LinearCode::contains(const BitVector& word) const {
  if (word.size() != length()) {
    return false;
  }
  BitVector residual = word;
  for (std::size_t i = 0; i < echelon_.pivots.size(); ++i) {
    if (residual.get(echelon_.pivots[i])) {
      residual ^= echelon_.reduced.row(i);
    }
  }
  return residual.is_zero();
}

LinearCode permute_columns(const LinearCode& code, std::span<const std::size_t> perm) {
  return LinearCode(code.generator().permute_columns(perm));
}

// ---------------------------------------------------------------------------
// Gray-code enumeration

namespace {

void check_budget(std::size_t dimension, const EnumerationLimits& limits) {
  if (dimension > limits.max_dimension || dimension >= 63) {
    raise(Errc::TooLarge, "dimension " + std::to_string(dimension) + " exceeds enumeration cap " +
                              std::to_string(limits.max_dimension));
  }
}

/// Visits the codewords for Gray indices [begin, end) of a code of length
/// at most 64: each step XORs a single generator row.
template <class Visit>
void gray_walk_small(const BitMatrix& g, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) {
    return;
  }
  const std::size_t k = g.rows();
  std::vector<std::uint64_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows[i] = g.row(i).to_word();
  }
  const std::uint64_t start = begin ^ (begin >> 1);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if ((start >> i) & 1u) {
      word ^= rows[i];
    }
  }
  visit(word);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    visit(word);
  }
}

/// Multiword variant; visit receives the running weight.
template <class Visit>
void gray_walk_wide(const BitMatrix& g, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) {
    return;
  }
  const std::size_t k = g.rows();
  const std::size_t w = BitVector::word_count(g.cols());
  std::vector<std::uint64_t> rows(k * w);
  for (std::size_t i = 0; i < k; ++i) {
    auto src = g.row(i).words();
    std::copy(src.begin(), src.end(), rows.begin() + static_cast<std::ptrdiff_t>(i * w));
  }
  std::vector<std::uint64_t> word(w, 0);
  const std::uint64_t start = begin ^ (begin >> 1);
  for (std::size_t i = 0; i < k; ++i) {
    if ((start >> i) & 1u) {
      for (std::size_t t = 0; t < w; ++t) {
        word[t] ^= rows[i * w + t];
      }
    }
  }
  auto weight = [&] {
    std::size_t s = 0;
    for (auto x : word) {
      s += static_cast<std::size_t>(std::popcount(x));
    }
    return s;
  };
  visit(weight());
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const std::size_t r = static_cast<std::size_t>(std::countr_zero(i));
    for (std::size_t t = 0; t < w; ++t) {
      word[t] ^= rows[r * w + t];
    }
    visit(weight());
  }
}

}  // namespace

WeightDistribution weight_distribution_range(const LinearCode& code, std::uint64_t begin, std::uint64_t end) {
  WeightDistribution wd;
  wd.counts.assign(code.length() + 1, 0);
  if (code.length() <= 64) {
    gray_walk_small(code.generator(), begin, end,
                    [&](std::uint64_t word) { ++wd.counts[static_cast<std::size_t>(std::popcount(word))]; });
  } else {
    gray_walk_wide(code.generator(), begin, end, [&](std::size_t weight) { ++wd.counts[weight]; });
  }
  return wd;
}

std::size_t min_weight_range(const LinearCode& code, std::uint64_t begin, std::uint64_t end) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  if (code.length() <= 64) {
    unsigned local = std::numeric_limits<unsigned>::max();
    gray_walk_small(code.generator(), begin, end, [&](std::uint64_t word) {
      const auto w = static_cast<unsigned>(std::popcount(word));
      if (w != 0 && w < local) {
        local = w;
      }
    });
    if (local != std::numeric_limits<unsigned>::max()) {
      best = local;
    }
  } else {
    gray_walk_wide(code.generator(), begin, end, [&](std::size_t w) {
      if (w != 0 && w < best) {
        best = w;
      }
    });
  }
  return best;
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationLimits& limits) {
  check_budget(code.dimension(), limits);
  const std::uint64_t total = std::uint64_t{1} << code.dimension();
  WeightDistribution result;
  result.counts.assign(code.length() + 1, 0);
  std::mutex merge_mutex;
  detail::parallel_slices(limits.jobs, total, [&](std::uint64_t b, std::uint64_t e, unsigned) {
    auto part = weight_distribution_range(code, b, e);
    std::lock_guard lock(merge_mutex);
    result.merge(part);
  });
  return result;
}

std::size_t min_distance(const LinearCode& code, const EnumerationLimits& limits) {
  check_budget(code.dimension(), limits);
  if (code.dimension() == 0) {
    return 0;
  }
  const std::uint64_t total = std::uint64_t{1} << code.dimension();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::mutex merge_mutex;
  detail::parallel_slices(limits.jobs, total, [&](std::uint64_t b, std::uint64_t e, unsigned) {
    const auto part = min_weight_range(code, b, e);
    std::lock_guard lock(merge_mutex);
    best = std::min(best, part);
  });
  return best;
}

// ---------------------------------------------------------------------------
// WeightDistribution / DistanceDistribution

std::uint64_t WeightDistribution::total() const noexcept {
  std::uint64_t s = 0;
  for (auto c : counts) {
    s += c;
  }
  return s;
}

std::optional<std::size_t> WeightDistribution::min_nonzero_weight() const noexcept {
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) {
      return w;
    }
  }
  return std::nullopt;
}

WeightDistribution& WeightDistribution::merge(const WeightDistribution& other) {
  if (counts.size() < other.counts.size()) {
    counts.resize(other.counts.size(), 0);
  }
  for (std::size_t i = 0; i < other.counts.size(); ++i) {
    counts[i] += other.counts[i];
  }
  return *this;
}

std::optional<std::size_t> DistanceDistribution::dual_distance() const {
  for (std::size_t i = 1; i < dual.size(); ++i) {
    if (dual[i] != 0) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> DistanceDistribution::min_distance() const {
  for (std::size_t i = 1; i < primal.size(); ++i) {
    if (primal[i] != 0) {
      return i;
    }
  }
  return std::nullopt;
}

bool DistanceDistribution::dual_nonnegative() const {
  return std::all_of(dual.begin(), dual.end(), [](const Rational& b) { return b >= 0; });
}

// ---------------------------------------------------------------------------
// UnrestrictedCode

UnrestrictedCode::UnrestrictedCode(std::size_t length, std::vector<BitVector> words)
    : length_(length), words_(std::move(words)) {
  for (const auto& w : words_) {
    if (w.size() != length_) {
      raise(Errc::DimensionMismatch, "codeword length differs from code length");
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    raise(Errc::InvalidArgument, "unrestricted code contains duplicate codewords");
  }
}

UnrestrictedCode UnrestrictedCode::from_linear(const LinearCode& code, const EnumerationLimits& limits) {
  check_budget(code.dimension(), limits);
  const std::uint64_t total = std::uint64_t{1} << code.dimension();
  std::vector<BitVector> words;
  words.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t m = 0; m < total; ++m) {
    words.push_back(code.encode(BitVector::from_word(m, code.dimension())));
  }
  return UnrestrictedCode(code.length(), std::move(words));
}

bool UnrestrictedCode::contains(const BitVector& word) const {
  return std::binary_search(words_.begin(), words_.end(), word);
}

// ---------------------------------------------------------------------------
// MacWilliams machinery

BigInt krawtchouk(unsigned n, unsigned j, unsigned i) {
  BigInt sum = 0;
  for (unsigned s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) {
      continue;
    }
    BigInt term = binomial(i, s) * binomial(n - i, j - s);
    if (s % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<Rational> macwilliams_transform(std::span<const Rational> distribution, std::size_t n,
                                            const Rational& size) {
  if (distribution.size() != n + 1) {
    raise(Errc::DimensionMismatch, "distribution must have n + 1 entries");
  }
  if (size == 0) {
    raise(Errc::InvalidArgument, "code size must be positive");
  }
  const auto nn = static_cast<unsigned>(n);
  std::vector<Rational> out(n + 1);
  for (unsigned j = 0; j <= nn; ++j) {
    Rational acc = 0;
    for (unsigned i = 0; i <= nn; ++i) {
      if (distribution[i] != 0) {
        acc += distribution[i] * Rational(krawtchouk(nn, j, i));
      }
    }
    out[j] = acc / size;
  }
  return out;
}

DistanceDistribution distance_distribution(const UnrestrictedCode& code, const EnumerationLimits& limits) {
  const std::size_t m = code.size();
  if (m == 0) {
    raise(Errc::InvalidArgument, "empty code has no distance distribution");
  }
  const unsigned bits = static_cast<unsigned>(std::bit_width(m - 1));
  if (2 * bits > limits.max_pair_log2) {
    raise(Errc::TooLarge, "all-pairs distance count exceeds the pair budget");
  }
  const std::size_t n = code.length();
  std::vector<std::uint64_t> pair_counts(n + 1, 0);
  auto words = code.words();
  if (n <= 64) {
    std::vector<std::uint64_t> packed(m);
    for (std::size_t i = 0; i < m; ++i) {
      packed[i] = words[i].to_word();
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        pair_counts[static_cast<std::size_t>(std::popcount(packed[i] ^ packed[j]))] += 2;
      }
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        pair_counts[(words[i] ^ words[j]).weight()] += 2;
      }
    }
  }
  pair_counts[0] += m;
  DistanceDistribution dd;
  dd.length = n;
  dd.size = Rational(static_cast<unsigned long long>(m));
  dd.primal.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    dd.primal[i] = Rational(static_cast<unsigned long long>(pair_counts[i])) / dd.size;
  }
  dd.dual = macwilliams_transform(dd.primal, n, dd.size);
  return dd;
}

DistanceDistribution distance_distribution(const LinearCode& code, const EnumerationLimits& limits) {
  // For a linear code every word sees the same distance profile: B_i = A_i.
  const auto wd = weight_distribution(code, limits);
  DistanceDistribution dd;
  dd.length = code.length();
  dd.size = Rational(BigInt(1) << code.dimension());
  dd.primal.resize(code.length() + 1);
  for (std::size_t i = 0; i <= code.length(); ++i) {
    dd.primal[i] = Rational(static_cast<unsigned long long>(wd.counts[i]));
  }
  dd.dual = macwilliams_transform(dd.primal, dd.length, dd.size);
  return dd;
}

LinearCode dual_code(const LinearCode& code) {
  BitMatrix basis = right_nullspace(code.generator());
  if (basis.rows() == 0) {
    // The dual of the full space is {0}; represent it by a 0×n generator.
    return LinearCode(BitMatrix(0, code.length()));
  }
  return LinearCode(std::move(basis));
}

std::size_t dual_distance(const LinearCode& code, const EnumerationLimits& limits) {
  return min_distance(dual_code(code), limits);
}

std::size_t dual_distance(const UnrestrictedCode& code, const EnumerationLimits& limits) {
  const auto dd = distance_distribution(code, limits);
  const auto d = dd.dual_distance();
  if (!d) {
    raise(Errc::InvalidArgument, "dual distribution vanishes beyond index 0");
  }
  return *d;
}

bool is_self_dual(const LinearCode& code) {
  if (2 * code.dimension() != code.length()) {
    return false;
  }
  const auto& g = code.generator();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      if (g.row(i).dot(g.row(j))) {
        return false;
      }
    }
  }
  return true;
}

bool is_formally_self_dual(const LinearCode& code, const EnumerationLimits& limits) {
  if (2 * code.dimension() != code.length()) {
    return false;
  }
  const auto dd = distance_distribution(code, limits);
  return dd.primal == dd.dual;
}

bool is_even_fsd(const LinearCode& code, const EnumerationLimits& limits) {
  if (!is_formally_self_dual(code, limits)) {
    return false;
  }
  const auto wd = weight_distribution(code, limits);
  for (std::size_t w = 1; w < wd.counts.size(); w += 2) {
    if (wd.counts[w] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace ciskit
