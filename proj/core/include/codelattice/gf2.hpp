#pragma once

// Linear algebra over F_2 and binary linear codes.
//
// Vectors are bit-packed (coordinate i lives in bit i % 64 of word i / 64).
// Matrices are stored by column because codes are column-generated: the code
// of a matrix G is the F_2-span of its columns.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codelattice {

class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t length);

  static BinaryVector from_bits(std::initializer_list<int> bits);
  static BinaryVector from_bits(std::span<const int> bits);
  /// Parses a string of '0'/'1' characters; other characters are rejected.
  static BinaryVector from_string(std::string_view bits);
  static BinaryVector unit(std::size_t length, std::size_t index);
  static BinaryVector ones(std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  /// Hamming weight.
  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Index of the first set coordinate, or size() when zero.
  std::size_t first_set() const noexcept;
  std::vector<std::size_t> support() const;

  /// Sum over F_2.
  BinaryVector& operator^=(const BinaryVector& other);
  friend BinaryVector operator^(BinaryVector lhs, const BinaryVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  /// Coordinate-wise product, in place.
  BinaryVector& operator&=(const BinaryVector& other);

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::string to_string() const;

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
  /// Lexicographic on the bit string b_0 b_1 ... b_{n-1}; shorter vectors first.
  friend std::strong_ordering operator<=>(const BinaryVector& a,
                                          const BinaryVector& b);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Coordinate-wise product x ⊙ y.
BinaryVector schur_product(const BinaryVector& x, const BinaryVector& y);

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  static BinaryMatrix from_columns(std::size_t rows,
                                   std::vector<BinaryVector> columns);
  /// Row-major literal, e.g. {{1, 1, 0}, {0, 1, 1}}.
  static BinaryMatrix from_rows(
      std::initializer_list<std::initializer_list<int>> rows);
  static BinaryMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  const BinaryVector& column(std::size_t c) const;
  const std::vector<BinaryVector>& columns() const noexcept {
    return columns_;
  }
  BinaryVector row(std::size_t r) const;

  /// M·x over F_2; x has one entry per column.
  BinaryVector multiply(const BinaryVector& x) const;

  /// Columns of *this followed by columns of other.
  BinaryMatrix hconcat(const BinaryMatrix& other) const;
  /// Rows of *this stacked above rows of other.
  BinaryMatrix vstack(const BinaryMatrix& other) const;
  /// B ⊗ 1_m: row i of *this repeated m times consecutively.
  BinaryMatrix replicate_rows(std::size_t m) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<BinaryVector> columns_;
};

/// Incrementally built subspace of F_2^n with O(dim) membership tests.
class Span {
 public:
  explicit Span(std::size_t length) : length_(length) {}

  /// Adds v; returns true when v was independent of the current span.
  bool insert(const BinaryVector& v);
  bool contains(const BinaryVector& v) const;
  /// Residue of v after elimination; zero iff v lies in the span.
  BinaryVector reduce(BinaryVector v) const;

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BinaryVector>& basis() const noexcept { return basis_; }

 private:
  std::size_t length_;
  std::vector<BinaryVector> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const BinaryMatrix& m);

/// Canonical basis of {x : Mx = 0}: reduced echelon form, lexicographically
/// sorted. Empty iff M has full column rank.
std::vector<BinaryVector> kernel_basis(const BinaryMatrix& m);

/// Reduced echelon basis (pivot = first set coordinate) of span(vectors),
/// lexicographically sorted. Unique for a given subspace.
std::vector<BinaryVector> canonical_basis(std::span<const BinaryVector> vectors,
                                          std::size_t length);

/// Greedily appends standard basis vectors, visited in an order fixed by the
/// seed (seed 0 is the natural order), until (K0 | M) has rank n. Returns K0.
BinaryMatrix complete_to_full_rank(const BinaryMatrix& m, std::uint64_t seed);

/// Deterministic permutation of 0..n-1 (identity for seed 0).
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

class Code {
 public:
  /// Exhaustive codeword sweeps refuse codes of larger rank.
  static constexpr std::size_t kMaxSweepRank = 28;

  explicit Code(BinaryMatrix generator);

  const BinaryMatrix& generator() const noexcept { return generator_; }
  std::size_t length() const noexcept { return generator_.rows(); }
  std::size_t rank() const noexcept { return span_.dimension(); }
  bool contains(const BinaryVector& v) const { return span_.contains(v); }
  /// Independent vectors spanning the code (echelon form).
  const std::vector<BinaryVector>& basis() const noexcept {
    return span_.basis();
  }

 private:
  BinaryMatrix generator_;
  Span span_;
};

Code identity_code(std::size_t n);
Code repetition_code(std::size_t n);
/// The [24,12,8] extended binary Golay code in systematic form.
Code extended_golay_code();
/// Reed–Muller code RM(r, m) with coordinates ordered by the binary
/// expansion of the evaluation point.
Code reed_muller_code(std::size_t r, std::size_t m);

/// Every codeword, lexicographically sorted (rank <= 20).
std::vector<BinaryVector> codewords(const Code& code);

std::size_t min_distance(const Code& code);
/// S_C: all codewords of weight d(C), lexicographically sorted.
std::vector<BinaryVector> min_weight_codewords(const Code& code);
std::size_t code_kissing_number(const Code& code);
/// Nonzero codewords of weight at most max_weight, sorted.
std::vector<BinaryVector> codewords_up_to_weight(const Code& code,
                                                 std::size_t max_weight);
/// A_w for w = 0..n.
std::vector<std::uint64_t> weight_distribution(const Code& code);

bool is_subcode(const Code& sub, const Code& code);

/// Nested codes C_1 ⊇ C_2 ⊇ ... ⊇ C_a inside F_2^n (C_0 = F_2^n implicit).
class CodeTower {
 public:
  explicit CodeTower(std::vector<Code> levels);

  std::size_t length() const noexcept { return length_; }
  /// a, the number of explicit levels.
  std::size_t depth() const noexcept { return levels_.size(); }
  /// C_i for 1 <= i <= depth().
  const Code& level(std::size_t i) const;
  const std::vector<Code>& levels() const noexcept { return levels_; }

 private:
  std::size_t length_;
  std::vector<Code> levels_;
};

struct SchurWitness {
  std::size_t level;  // i with c, c' in C_i and c ⊙ c' outside C_{i-1}
  BinaryVector left;
  BinaryVector right;
  BinaryVector product;
};

struct SchurClosure {
  bool closed = true;
  std::optional<SchurWitness> witness;
};

/// Decided on generator pairs: ⊙ is bilinear, so products of generators span
/// the products of all codewords.
SchurClosure is_schur_closed_tower(const CodeTower& tower);

}  // namespace codelattice
