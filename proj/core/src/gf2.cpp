#include "codelattice/gf2.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include "codelattice/error.hpp"

namespace codelattice {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

void require_same_length(const BinaryVector& a, const BinaryVector& b,
                         const char* where) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::string(where) + ": lengths " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
  }
}

// Calls visit(word) for every codeword spanned by `basis`, in Gray-code order
// starting from zero.
template <typename Visit>
void sweep(const std::vector<BinaryVector>& basis, std::size_t length,
           Visit&& visit) {
  if (basis.size() > Code::kMaxSweepRank) {
    throw Error(ErrorCode::kRankTooLarge,
                "exhaustive sweep over 2^" + std::to_string(basis.size()) +
                    " codewords refused (cap 2^" +
                    std::to_string(Code::kMaxSweepRank) + ")");
  }
  BinaryVector current(length);
  visit(current);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    current ^= basis[std::countr_zero(step)];
    visit(current);
  }
}

const int kGolayRedundancy[12][12] = {
    {1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0}, {0, 1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1},
    {1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1},
    {1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1}, {1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1},
    {1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0}, {0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0},
    {0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0}, {0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1},
    {1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1},
};

}  // namespace

// ---------------------------------------------------------------------------
// BinaryVector

BinaryVector::BinaryVector(std::size_t length)
    : length_(length), words_(word_count(length), 0) {}

BinaryVector BinaryVector::from_bits(std::initializer_list<int> bits) {
  return from_bits(std::span<const int>(bits.begin(), bits.size()));
}

BinaryVector BinaryVector::from_bits(std::span<const int> bits) {
  BinaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw Error(ErrorCode::kInvalidArgument, "binary entry must be 0 or 1");
    }
    v.set(i, bits[i] == 1);
  }
  return v;
}

BinaryVector BinaryVector::from_string(std::string_view bits) {
  BinaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw Error(ErrorCode::kInvalidArgument,
                  "binary string may only contain 0 and 1");
    }
    v.set(i, bits[i] == '1');
  }
  return v;
}

BinaryVector BinaryVector::unit(std::size_t length, std::size_t index) {
  BinaryVector v(length);
  v.set(index, true);
  return v;
}

BinaryVector BinaryVector::ones(std::size_t length) {
  BinaryVector v(length);
  for (std::size_t i = 0; i < length; ++i) v.set(i, true);
  return v;
}

bool BinaryVector::get(std::size_t i) const {
  if (i >= length_) throw Error(ErrorCode::kInvalidArgument, "bit index");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BinaryVector::set(std::size_t i, bool value) {
  if (i >= length_) throw Error(ErrorCode::kInvalidArgument, "bit index");
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BinaryVector::flip(std::size_t i) { set(i, !get(i)); }

std::size_t BinaryVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BinaryVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t BinaryVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return length_;
}

std::vector<std::size_t> BinaryVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other) {
  require_same_length(*this, other, "vector sum");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BinaryVector& BinaryVector::operator&=(const BinaryVector& other) {
  require_same_length(*this, other, "schur product");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::string BinaryVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BinaryVector& a, const BinaryVector& b) {
  if (a.length_ != b.length_) return a.length_ <=> b.length_;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      // The vector holding 0 at the first differing coordinate sorts first.
      return (a.words_[w] & low) ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

BinaryVector schur_product(const BinaryVector& x, const BinaryVector& y) {
  BinaryVector out = x;
  out &= y;
  return out;
}

// ---------------------------------------------------------------------------
// BinaryMatrix

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols, BinaryVector(rows)) {}

BinaryMatrix BinaryMatrix::from_columns(std::size_t rows,
                                        std::vector<BinaryVector> columns) {
  for (const auto& c : columns) {
    if (c.size() != rows) {
      throw Error(ErrorCode::kShapeMismatch,
                  "column of length " + std::to_string(c.size()) +
                      " in a matrix with " + std::to_string(rows) + " rows");
    }
  }
  BinaryMatrix m;
  m.rows_ = rows;
  m.columns_ = std::move(columns);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t n = rows.size();
  const std::size_t k = n == 0 ? 0 : rows.begin()->size();
  BinaryMatrix m(n, k);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != k) {
      throw Error(ErrorCode::kShapeMismatch, "ragged matrix literal");
    }
    std::size_t c = 0;
    for (int entry : row) {
      if (entry != 0 && entry != 1) {
        throw Error(ErrorCode::kInvalidArgument, "binary entry must be 0 or 1");
      }
      m.set(r, c++, entry == 1);
    }
    ++r;
  }
  return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
  return column(c).get(r);
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (c >= columns_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "column index");
  }
  columns_[c].set(r, value);
}

const BinaryVector& BinaryMatrix::column(std::size_t c) const {
  if (c >= columns_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "column index");
  }
  return columns_[c];
}

BinaryVector BinaryMatrix::row(std::size_t r) const {
  BinaryVector out(cols());
  for (std::size_t c = 0; c < cols(); ++c) out.set(c, columns_[c].get(r));
  return out;
}

BinaryVector BinaryMatrix::multiply(const BinaryVector& x) const {
  if (x.size() != cols()) {
    throw Error(ErrorCode::kLengthMismatch,
                "matrix with " + std::to_string(cols()) +
                    " columns applied to vector of length " +
                    std::to_string(x.size()));
  }
  BinaryVector out(rows_);
  for (std::size_t c : x.support()) out ^= columns_[c];
  return out;
}

BinaryMatrix BinaryMatrix::hconcat(const BinaryMatrix& other) const {
  if (other.rows_ != rows_) {
    throw Error(ErrorCode::kShapeMismatch, "hconcat row counts differ");
  }
  std::vector<BinaryVector> cols = columns_;
  cols.insert(cols.end(), other.columns_.begin(), other.columns_.end());
  return from_columns(rows_, std::move(cols));
}

BinaryMatrix BinaryMatrix::vstack(const BinaryMatrix& other) const {
  if (other.cols() != cols()) {
    throw Error(ErrorCode::kShapeMismatch, "vstack column counts differ");
  }
  BinaryMatrix out(rows_ + other.rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::size_t r : columns_[c].support()) out.set(r, c, true);
    for (std::size_t r : other.columns_[c].support()) {
      out.set(rows_ + r, c, true);
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::replicate_rows(std::size_t m) const {
  BinaryMatrix out(rows_ * m, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::size_t r : columns_[c].support()) {
      for (std::size_t j = 0; j < m; ++j) out.set(r * m + j, c, true);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Span

BinaryVector Span::reduce(BinaryVector v) const {
  if (v.size() != length_) {
    throw Error(ErrorCode::kLengthMismatch,
                "vector of length " + std::to_string(v.size()) +
                    " tested against a span in F_2^" + std::to_string(length_));
  }
  // basis_[j] has no bits at the pivots of basis_[0..j-1], so a single pass
  // in insertion order clears every pivot.
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (v.get(pivots_[j])) v ^= basis_[j];
  }
  return v;
}

bool Span::insert(const BinaryVector& v) {
  BinaryVector r = reduce(v);
  if (r.is_zero()) return false;
  pivots_.push_back(r.first_set());
  basis_.push_back(std::move(r));
  return true;
}

bool Span::contains(const BinaryVector& v) const { return reduce(v).is_zero(); }

std::size_t rank(const BinaryMatrix& m) {
  Span span(m.rows());
  for (const auto& c : m.columns()) span.insert(c);
  return span.dimension();
}

std::vector<BinaryVector> canonical_basis(std::span<const BinaryVector> vectors,
                                          std::size_t length) {
  std::vector<BinaryVector> rows;
  for (const auto& v : vectors) {
    if (v.size() != length) {
      throw Error(ErrorCode::kLengthMismatch, "canonical_basis input length");
    }
    rows.push_back(v);
  }
  // Gauss–Jordan with pivots taken left to right.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  rows.resize(rank);
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<BinaryVector> kernel_basis(const BinaryMatrix& m) {
  const std::size_t k = m.cols();
  std::vector<BinaryVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(k, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<BinaryVector> kernel;
  for (std::size_t free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    BinaryVector x(k);
    x.set(free, true);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (rows[i].get(free)) x.set(pivot_cols[i], true);
    }
    kernel.push_back(std::move(x));
  }
  return canonical_basis(kernel, k);
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  if (seed == 0) return order;
  // mt19937_64 is fully specified by the standard; the reduction below keeps
  // the permutation identical across standard libraries.
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

BinaryMatrix complete_to_full_rank(const BinaryMatrix& m, std::uint64_t seed) {
  const std::size_t n = m.rows();
  Span span(n);
  for (const auto& c : m.columns()) span.insert(c);
  std::vector<BinaryVector> added;
  for (std::size_t i : seeded_permutation(n, seed)) {
    if (span.dimension() == n) break;
    BinaryVector e = BinaryVector::unit(n, i);
    if (span.insert(e)) added.push_back(std::move(e));
  }
  return BinaryMatrix::from_columns(n, std::move(added));
}

// ---------------------------------------------------------------------------
// Codes

Code::Code(BinaryMatrix generator)
    : generator_(std::move(generator)), span_(generator_.rows()) {
  for (const auto& c : generator_.columns()) span_.insert(c);
}

Code identity_code(std::size_t n) { return Code(BinaryMatrix::identity(n)); }

Code repetition_code(std::size_t n) {
  return Code(BinaryMatrix::from_columns(n, {BinaryVector::ones(n)}));
}

Code extended_golay_code() {
  BinaryMatrix g(24, 12);
  for (std::size_t c = 0; c < 12; ++c) {
    g.set(c, c, true);
    for (std::size_t r = 0; r < 12; ++r) {
      if (kGolayRedundancy[r][c] == 1) g.set(12 + r, c, true);
    }
  }
  return Code(std::move(g));
}

Code reed_muller_code(std::size_t r, std::size_t m) {
  if (m == 0 || m > 16 || r > m) {
    throw Error(ErrorCode::kInvalidArgument, "reed_muller_code parameters");
  }
  const std::size_t n = std::size_t{1} << m;
  std::vector<BinaryVector> cols;
  for (std::size_t degree = 0; degree <= r; ++degree) {
    // Variable subsets of the given size, in lexicographic order.
    std::vector<std::size_t> subset(degree);
    for (std::size_t i = 0; i < degree; ++i) subset[i] = i;
    while (true) {
      BinaryVector col(n);
      for (std::size_t p = 0; p < n; ++p) {
        bool value = true;
        for (std::size_t var : subset) {
          value = value && ((p >> (m - 1 - var)) & 1U);
        }
        col.set(p, value);
      }
      cols.push_back(std::move(col));
      if (degree == 0) break;
      std::size_t i = degree;
      while (i > 0 && subset[i - 1] == m - degree + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < degree; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return Code(BinaryMatrix::from_columns(n, std::move(cols)));
}

std::vector<BinaryVector> codewords(const Code& code) {
  if (code.rank() > 20) {
    throw Error(ErrorCode::kRankTooLarge,
                "listing 2^" + std::to_string(code.rank()) + " codewords");
  }
  std::vector<BinaryVector> out;
  out.reserve(std::size_t{1} << code.rank());
  sweep(code.basis(), code.length(),
        [&](const BinaryVector& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t min_distance(const Code& code) {
  if (code.rank() == 0) {
    throw Error(ErrorCode::kZeroCode, "minimum distance of the zero code");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  sweep(code.basis(), code.length(), [&](const BinaryVector& c) {
    const std::size_t w = c.weight();
    if (w != 0 && w < best) best = w;
  });
  return best;
}

std::vector<BinaryVector> codewords_up_to_weight(const Code& code,
                                                 std::size_t max_weight) {
  std::vector<BinaryVector> out;
  sweep(code.basis(), code.length(), [&](const BinaryVector& c) {
    const std::size_t w = c.weight();
    if (w != 0 && w <= max_weight) out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinaryVector> min_weight_codewords(const Code& code) {
  if (code.rank() == 0) {
    throw Error(ErrorCode::kZeroCode, "minimum-weight codewords of the zero code");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<BinaryVector> out;
  sweep(code.basis(), code.length(), [&](const BinaryVector& c) {
    const std::size_t w = c.weight();
    if (w == 0 || w > best) return;
    if (w < best) {
      best = w;
      out.clear();
    }
    out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t code_kissing_number(const Code& code) {
  return min_weight_codewords(code).size();
}

std::vector<std::uint64_t> weight_distribution(const Code& code) {
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  sweep(code.basis(), code.length(),
        [&](const BinaryVector& c) { ++counts[c.weight()]; });
  return counts;
}

bool is_subcode(const Code& sub, const Code& code) {
  if (sub.length() != code.length()) {
    throw Error(ErrorCode::kLengthMismatch,
                "subcode test between lengths " + std::to_string(sub.length()) +
                    " and " + std::to_string(code.length()));
  }
  return std::all_of(sub.generator().columns().begin(),
                     sub.generator().columns().end(),
                     [&](const BinaryVector& g) { return code.contains(g); });
}

// ---------------------------------------------------------------------------
// Towers

CodeTower::CodeTower(std::vector<Code> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) {
    throw Error(ErrorCode::kNotATower, "a tower needs at least one level");
  }
  length_ = levels_.front().length();
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].length() != length_) {
      throw Error(ErrorCode::kNotATower,
                  "level " + std::to_string(i + 1) + " has block length " +
                      std::to_string(levels_[i].length()) + ", expected " +
                      std::to_string(length_));
    }
    if (i > 0 && !is_subcode(levels_[i], levels_[i - 1])) {
      throw Error(ErrorCode::kNotATower,
                  "C_" + std::to_string(i + 1) + " is not contained in C_" +
                      std::to_string(i));
    }
  }
}

const Code& CodeTower::level(std::size_t i) const {
  if (i == 0 || i > levels_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "tower level " + std::to_string(i) + " out of range");
  }
  return levels_[i - 1];
}

SchurClosure is_schur_closed_tower(const CodeTower& tower) {
  // Level 1 products land in C_0 = F_2^n.
  for (std::size_t i = 2; i <= tower.depth(); ++i) {
    const auto& gens = tower.level(i).generator().columns();
    const Code& below = tower.level(i - 1);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t l = j + 1; l < gens.size(); ++l) {
        BinaryVector product = schur_product(gens[j], gens[l]);
        if (!below.contains(product)) {
          return {false, SchurWitness{i, gens[j], gens[l], std::move(product)}};
        }
      }
    }
  }
  return {};
}

}  // namespace codelattice
