#pragma once

// Builders and verifiers for the two counterexample families:
//
//  * Construction-D gadgets (A, B, w): with K_a = [A; B ⊗ 1_m] the code C(K_a)
//    has minimum distance 4^a, yet no ternary lattice vector of norm 2^a
//    lies in the special Construction-D lattice.
//  * Minimum-codeword gadgets (A, B, z): the lattice generated by the
//    minimum-weight codewords of C([A; B ⊗ 1_m]) contains bar G_m z, which
//    is strictly shorter than the minimum distance.

#include <cstdint>
#include <vector>

#include "codelattice/constructions.hpp"
#include "codelattice/gf2.hpp"
#include "codelattice/report.hpp"
#include "codelattice/zlattice.hpp"

namespace codelattice {

/// [A; B ⊗ 1_m].
BinaryMatrix replicated_generator(const BinaryMatrix& a, const BinaryMatrix& b,
                                  std::size_t m);

struct Thm22Gadget {
  BinaryMatrix a;
  BinaryMatrix b;
  BinaryVector w;
  std::size_t depth = 2;  // a
  std::size_t m = 17;

  BinaryMatrix ka() const { return replicated_generator(a, b, m); }
  std::size_t length() const { return a.rows() + m * b.rows(); }
};

/// A = [1_14 0; 0 I_2], B the 3×3 pair-sum matrix, w = 1_3.
Thm22Gadget cor23_gadget(std::size_t m = 17);

VerificationReport check_thm22_hypotheses(const Thm22Gadget& gadget);

struct Thm22Instance {
  Thm22Gadget gadget;
  std::vector<BinaryVector> c_list;  // c_1, ..., c_(a-1)
  BinaryMatrix k0;
  Code code{BinaryMatrix{}};  // C(K_a)
  Lattice lattice{0};         // L_D(K_0, c_1, ..., c_(a-1), K_a)
};

/// c_i has weight 4^i on the first coordinates (seed 0) or on coordinates
/// drawn from the seed; K_0 completes (c_1, ..., c_(a-1), K_a) to full rank.
Thm22Instance build_thm22(const Thm22Gadget& gadget, std::uint64_t seed = 0);

/// build_thm22 on cor23_gadget(m), requiring m > 16 and d(C(K_2)) = 16.
/// Seed 0 uses c_1 = e_1 + e_2 + e_3 + e_4.
Thm22Instance build_cor23(std::size_t m = 17, std::uint64_t seed = 0);

/// Every nonzero v in L ∩ {-1, 0, 1}^n with |v|² <= bound². A ternary member
/// reduces mod 2 to a codeword on its support, so only sign patterns over
/// codewords of weight <= bound² are tested. Requires L mod 2 ⊆ C.
std::vector<IntVector> ternary_sign_search(const Lattice& lattice,
                                           const Code& code, std::size_t bound,
                                           unsigned workers = 1);

struct Thm24Gadget {
  BinaryMatrix a;
  BinaryMatrix b;
  IntVector z;
  std::size_t m = 0;  // 0 selects min_m

  BinaryMatrix gm() const { return replicated_generator(a, b, m); }
};

/// A = [1100; 0011], B the 4×4 matrix with ker B = {0, 1111}, z = (1,1,-1,-1),
/// m = 4.
Thm24Gadget cor25_gadget(std::size_t m = 4);

VerificationReport check_thm24_hypotheses(const Thm24Gadget& gadget);

/// Smallest m with m >= d(C(A)) and d(C(A)) + m·d(C(B)) > |bar A z|_p^p.
std::size_t min_m(const Thm24Gadget& gadget, const Rational& p = 2);

VerificationReport verify_thm24(const Thm24Gadget& gadget, const Rational& p = 2,
                                const EnumerationOptions& options = {});

VerificationReport golay_lp_check(const Rational& p,
                                  const EnumerationOptions& options = {});

/// Hypotheses, d(C_a) = 4^a, the sign search at bound 2^a and bar c not in
/// L_D for every minimum-weight c. With full_enum, every member of squared
/// norm <= 4^a is also listed; a budget overflow there is recorded, not failed.
VerificationReport verify_thm22(const Thm22Gadget& gadget, std::uint64_t seed = 0,
                                bool full_enum = false,
                                const EnumerationOptions& options = {});

VerificationReport verify_cor23(std::size_t m = 17, std::uint64_t seed = 0,
                                bool full_enum = false,
                                const EnumerationOptions& options = {});

/// L_C*(C) against 2^(n-1)·L_A(C), plus λ₁² = 4^(n-1)·min(d, 4) (n <= 8).
VerificationReport verify_cstar_collapse(const Code& code,
                                         const EnumerationOptions& options = {});

/// Agreement of the D̄ lattice test with the Schur-closure test.
VerificationReport verify_dbar_schur(const CodeTower& tower);

}  // namespace codelattice
