#pragma once

// Exact integer lattices: canonical (Hermite normal form) bases, membership,
// LLL reduction and complete short-vector enumeration. Everything is computed
// with GMP integers and rationals; no floating point decides any answer.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace codelattice {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_int_vector(std::initializer_list<long> entries);
Integer squared_norm(const IntVector& v);
/// Canonical vector order: by squared norm, then lexicographically by entry.
bool canonical_less(const IntVector& a, const IntVector& b);
void sort_canonical(std::vector<IntVector>& vectors);

/// Columns generating a lattice; they need not be independent.
struct GeneratingSet {
  std::size_t dimension = 0;
  std::vector<IntVector> columns;

  explicit GeneratingSet(std::size_t n) : dimension(n) {}
  GeneratingSet(std::size_t n, std::vector<IntVector> cols);
  void add(IntVector column);
};

/// A lattice stored as its column Hermite normal form: lower triangular,
/// column j has its pivot in row pivot_row(j) with pivot rows strictly
/// increasing, pivots positive, and every entry of a pivot row left of the
/// pivot reduced into [0, pivot). Two lattices are equal iff the HNFs are.
class Lattice {
 public:
  /// The zero lattice in Z^n.
  explicit Lattice(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }
  std::size_t pivot_row(std::size_t j) const { return pivot_rows_.at(j); }
  const Integer& pivot(std::size_t j) const {
    return basis_.at(j)[pivot_rows_.at(j)];
  }
  /// Basisᵀ · Basis.
  const std::vector<std::vector<Integer>>& gram() const noexcept {
    return gram_;
  }
  bool is_full_rank() const noexcept { return rank() == dimension_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dimension_ == b.dimension_ && a.basis_ == b.basis_;
  }

 private:
  friend Lattice hnf(const GeneratingSet& generators);
  friend std::optional<IntVector> coordinates(const Lattice& lattice,
                                              const IntVector& v);

  void finalize();
  std::optional<std::optional<IntVector>> coordinates_small(
      const IntVector& v) const;

  std::size_t dimension_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<std::vector<Integer>> gram_;
  // Machine-word copy of the basis, present when every entry fits.
  std::vector<std::vector<std::int64_t>> small_basis_;
};

Lattice hnf(const GeneratingSet& generators);
Lattice lattice_from_columns(std::size_t dimension,
                             std::vector<IntVector> columns);
Lattice integer_lattice(std::size_t n);  // Z^n

/// Coefficients of v in the HNF basis, or nullopt when v is not a member.
std::optional<IntVector> coordinates(const Lattice& lattice, const IntVector& v);
bool contains(const Lattice& lattice, const IntVector& v);

/// |det| of the lattice. For full rank this is the product of HNF pivots.
/// Otherwise sqrt(det Gram) when that is an integer; if it is not, `value`
/// holds det Gram itself and `squared` is set.
struct Determinant {
  Integer value;
  bool squared = false;
};
Determinant determinant(const Lattice& lattice);

bool lattices_equal(const Lattice& a, const Lattice& b);
Lattice scale(const Lattice& lattice, const Integer& factor);
/// L1 ∩ L2 for full-rank lattices, computed through the dual lattices.
Lattice intersect(const Lattice& a, const Lattice& b);

/// Exact Gram–Schmidt data of an independent sequence b_1..b_r:
/// sqnorms[i] = |b*_i|², mu[i][j] = <b_i, b*_j> / |b*_j|² for j < i.
struct GramSchmidt {
  std::vector<Rational> sqnorms;
  std::vector<std::vector<Rational>> mu;
};
GramSchmidt gram_schmidt(const std::vector<IntVector>& basis);

Rational default_lll_delta();  // 99/100

/// Integral LLL (exact). Returns a size-reduced basis of the same lattice
/// satisfying the Lovász condition at delta, 1/4 < delta < 1.
std::vector<IntVector> lll_reduce(const Lattice& lattice,
                                  const Rational& delta = default_lll_delta());
std::vector<IntVector> lll_reduce_basis(std::vector<IntVector> basis,
                                        const Rational& delta);

struct EnumerationOptions {
  std::uint64_t node_budget = 1'000'000'000;
  unsigned workers = 1;
  Rational delta = default_lll_delta();
};

struct ShortVectorReport {
  Integer lambda1_sq;
  std::size_t kissing = 0;
  /// Every vector of squared norm lambda1_sq (both signs), canonical order.
  std::vector<IntVector> vectors;
  std::uint64_t nodes = 0;
};

/// Exact λ₁² and all minimal vectors (Fincke–Pohst after LLL, no pruning).
/// Throws kEnumerationBudgetExceeded rather than returning a partial answer.
ShortVectorReport shortest_vectors(const Lattice& lattice,
                                   const EnumerationOptions& options = {});

/// All lattice vectors with squared norm <= bound (zero included).
std::vector<IntVector> vectors_up_to(const Lattice& lattice,
                                     const Integer& bound,
                                     const EnumerationOptions& options = {});

/// Σ|v_i|^p carried exactly: an integer for integral p, otherwise a sum of
/// rational powers compared against integers by certified bracketing.
class LpPower {
 public:
  LpPower(const IntVector& v, const Rational& p);

  const Rational& p() const noexcept { return p_; }
  /// The exact value when p is an integer.
  std::optional<Integer> exact() const;
  double approx() const;
  /// Exact three-way comparison of Σ|v_i|^p with an integer.
  std::strong_ordering compare(const Integer& bound) const;

 private:
  Rational p_;
  // (|v_i|, multiplicity) for the nonzero entries.
  std::vector<std::pair<Integer, std::size_t>> terms_;
};

LpPower lp_norm(const IntVector& v, const Rational& p);

}  // namespace codelattice
