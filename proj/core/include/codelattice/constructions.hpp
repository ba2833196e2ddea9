#pragma once

// Lattices built from binary codes and towers of codes.
//
// All constructions go through the entry-wise embedding bar: F_2 -> {0, 1},
// which is not additive: bar(c + c') = bar c + bar c' − 2·bar(c ⊙ c').

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "codelattice/gf2.hpp"
#include "codelattice/zlattice.hpp"

namespace codelattice {

IntVector embed(const BinaryVector& x);
/// Embedded columns of m.
std::vector<IntVector> embed(const BinaryMatrix& m);
/// Reduces an integer vector entry-wise modulo 2.
BinaryVector mod2(const IntVector& v);

/// Evaluates both sides of bar(c + c') = bar c + bar c' − 2·bar(c ⊙ c') in Z^n.
bool embed_sum_identity_check(const BinaryVector& c, const BinaryVector& c2);

/// bar C + 2Z^n.
Lattice construction_a(const Code& code);

/// Column blocks K_0, ..., K_a of a Construction-D input; block i is scaled
/// by 2^(a-i) before embedding.
struct DTowerInput {
  std::vector<BinaryMatrix> blocks;

  std::size_t depth() const { return blocks.empty() ? 0 : blocks.size() - 1; }
  /// Prepends K_0 = complete_to_full_rank(K_1 | ... | K_a, seed).
  static DTowerInput complete(std::vector<BinaryMatrix> upper_blocks,
                              std::uint64_t seed);
};

/// L(2^a·bar K_0, 2^(a-1)·bar K_1, ..., bar K_a). Strict mode additionally
/// requires (K_0 | ... | K_a) to be an invertible n×n matrix and
/// d(C_i) >= 4^i where C_i is spanned by K_i, ..., K_a.
Lattice construction_d(const DTowerInput& input, bool strict);

/// The special case L(2^a bar K_0, 2^(a-1) bar c_1, ..., 2 bar c_(a-1), bar K_a)
/// with |c_i| = 4^i and (K_0, c_1, ..., c_(a-1), K_a) invertible.
Lattice vladut_special_d(const BinaryMatrix& k0,
                         const std::vector<BinaryVector>& c_list,
                         const BinaryMatrix& ka, std::size_t a);

/// Lattice generated by the embeddings of all minimum-weight codewords.
Lattice simplified_d(const Code& code);

/// 2^n Z^n + ∩_{i=1..n} (2^(n-i) bar C + 2^(n-i+1) Z^n), computed as the
/// scaling 2^(n-1)·L_A(C). For n <= 8 the definitional intersection is also
/// evaluated and must agree. Requires n <= 32.
Lattice construction_c_star(const Code& code);
/// The definitional route alone (intersection of the n scaled cosets).
Lattice construction_c_star_definitional(const Code& code);

/// Unique expansion v = Σ_i 2^(a-i)·bar c_i + 2^a·tail with c_i in C_i.
struct DBarDecomposition {
  /// c_a, c_(a-1), ..., c_1 in peeling order.
  std::vector<BinaryVector> codewords;
  IntVector tail;
};

/// Membership in the set 2^a Z^n + 2^(a-1) bar C_1 + ... + bar C_a. Each
/// level's codeword is forced by the residue modulo 2, so peeling the binary
/// digits of v decides membership exactly.
std::optional<DBarDecomposition> d_bar_member(const CodeTower& tower,
                                              const IntVector& v);

/// Lattice generated by the D̄ set (2^a e_j and 2^(a-i) bar c for every
/// codeword c of C_i).
Lattice d_bar_generated_lattice(const CodeTower& tower);

struct DBarLatticeCheck {
  bool is_lattice = false;
  Lattice generated{0};
  std::uint64_t cosets = 0;
  /// A member of the generated lattice outside the D̄ set, when one exists.
  std::optional<IntVector> witness;
  /// Two members of the D̄ set whose sum is `witness`, when such a pair was
  /// found among the scaled generator columns.
  std::optional<std::pair<IntVector, IntVector>> summands;
};

/// Decides whether the D̄ set is closed under addition by testing one
/// representative of every coset of 2^a Z^n in the generated lattice. On
/// failure the witness is the first sum 2^(a-i)(bar g + bar g') of generator
/// columns g, g' of one level (levels from C_a down, columns in order) that
/// leaves the set, or else the canonically smallest failing representative.
DBarLatticeCheck d_bar_is_lattice(const CodeTower& tower,
                                  std::uint64_t max_cosets = std::uint64_t{1} << 20);

}  // namespace codelattice
