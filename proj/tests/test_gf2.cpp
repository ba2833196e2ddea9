#include <doctest.h>

#include <random>

#include "codelattice/gadgets.hpp"
#include "codelattice/gf2.hpp"
#include "codelattice/matrix_io.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace codelattice;

namespace {

BinaryMatrix cor25_b() {
  return BinaryMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}});
}

BinaryMatrix cor23_b() { return BinaryMatrix::from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

std::vector<BinaryVector> to_vectors(const std::vector<oracle::Bits>& words) {
  std::vector<BinaryVector> out;
  for (const auto& w : words) out.push_back(BinaryVector::from_bits(std::span<const int>(w)));
  return out;
}

}  // namespace

TEST_CASE("binary vector basics") {
  const auto x = BinaryVector::from_string("10110");
  CHECK(x.size() == 5);
  CHECK(x.weight() == 3);
  CHECK(x.support() == std::vector<std::size_t>{0, 2, 3});
  CHECK(x.first_set() == 0);
  CHECK(BinaryVector(7).is_zero());
  CHECK(BinaryVector(7).first_set() == 7);
  CHECK((x ^ x).is_zero());
  CHECK(x.to_string() == "10110");
  CHECK(BinaryVector::from_string("01") < BinaryVector::from_string("10"));
  CHECK_ERROR(BinaryVector::from_string("102"), kInvalidArgument);
  CHECK_ERROR(x ^ BinaryVector(4), kLengthMismatch);

  // Words past 64 bits.
  BinaryVector wide(130);
  wide.set(0, true);
  wide.set(64, true);
  wide.set(129, true);
  CHECK(wide.weight() == 3);
  CHECK(wide.support() == std::vector<std::size_t>{0, 64, 129});
}

TEST_CASE("rank") {
  CHECK(rank(BinaryMatrix::identity(3)) == 3);
  CHECK(rank(BinaryMatrix(2, 4)) == 0);
  CHECK(rank(cor25_b()) == 3);
  CHECK(rank(cor25_b()) == oracle::rank(cor25_b()));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = oracle::random_matrix(rng, 1 + rng() % 9, 1 + rng() % 8);
    CHECK(rank(m) == oracle::rank(m));
  }
}

TEST_CASE("rank is invariant under row and column permutations") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 2 + rng() % 7, cols = 2 + rng() % 7;
    const auto m = oracle::random_matrix(rng, rows, cols);
    std::vector<std::size_t> rp(rows), cp(cols);
    for (std::size_t i = 0; i < rows; ++i) rp[i] = i;
    for (std::size_t i = 0; i < cols; ++i) cp[i] = i;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    BinaryMatrix p(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) p.set(r, c, m.get(rp[r], cp[c]));
    }
    CHECK(rank(p) == rank(m));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(BinaryMatrix::identity(3)).empty());
  const auto k23 = kernel_basis(cor23_b());
  REQUIRE(k23.size() == 1);
  CHECK(k23[0] == BinaryVector::ones(3));
  const auto k25 = kernel_basis(cor25_b());
  REQUIRE(k25.size() == 1);
  CHECK(k25[0] == BinaryVector::ones(4));
}

TEST_CASE("kernel basis spans exactly the kernel") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 9);
    const auto basis = kernel_basis(m);
    for (const auto& b : basis) CHECK(m.multiply(b).is_zero());
    const auto brute = oracle::kernel(m);
    CHECK(brute.size() == (std::size_t{1} << basis.size()));
    CHECK(basis.size() == m.cols() - rank(m));
    // Canonical: reduced echelon rows in lexicographic order.
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    CHECK(canonical_basis(basis, m.cols()) == basis);
  }
}

TEST_CASE("minimum distance") {
  CHECK(min_distance(identity_code(5)) == 1);
  const Code golay(read_binary_matrix(CODELATTICE_DATA_DIR "/golay24.txt"));
  CHECK(golay.length() == 24);
  CHECK(golay.rank() == 12);
  CHECK(min_distance(golay) == oracle::min_distance(golay.generator()));
  CHECK(min_distance(golay) == 8);
  CHECK_ERROR(min_distance(Code(BinaryMatrix(4, 2))), kZeroCode);
  CHECK_ERROR(min_distance(identity_code(29)), kRankTooLarge);
}

TEST_CASE("cor25 code parameters") {
  const Code c(cor25_gadget(4).gm());
  CHECK(c.length() == 18);
  CHECK(c.rank() == 3);
  CHECK(min_distance(c) == 9);
}

TEST_CASE("bundled Golay file matches the embedded generator") {
  const Code file(read_binary_matrix(CODELATTICE_DATA_DIR "/golay24.txt"));
  const Code embedded = extended_golay_code();
  CHECK(codewords(file) == codewords(embedded));
  const auto dist = weight_distribution(embedded);
  CHECK(dist[0] == 1);
  CHECK(dist[8] == 759);
  CHECK(dist[12] == 2576);
  CHECK(dist[16] == 759);
  CHECK(dist[24] == 1);
}

TEST_CASE("minimum-weight codewords") {
  const auto units = min_weight_codewords(identity_code(3));
  CHECK(units == std::vector<BinaryVector>{BinaryVector::from_string("001"),
                                           BinaryVector::from_string("010"),
                                           BinaryVector::from_string("100")});

  const auto g = cor23_gadget(17);
  const Code c23(g.ka());
  const auto s23 = min_weight_codewords(c23);
  REQUIRE(s23.size() == 1);
  CHECK(s23[0] == g.ka().multiply(g.w));
  CHECK(s23[0].weight() == 16);
  CHECK(code_kissing_number(c23) == 1);

  const Code golay = extended_golay_code();
  CHECK(code_kissing_number(golay) == 759);
  CHECK(code_kissing_number(golay) == oracle::min_weight_words(golay.generator()).size());

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = oracle::random_matrix(rng, 3 + rng() % 8, 1 + rng() % 6);
    if (rank(m) == 0) continue;
    const Code code(m);
    auto expected = to_vectors(oracle::min_weight_words(m));
    std::sort(expected.begin(), expected.end());
    CHECK(min_weight_codewords(code) == expected);
    for (const auto& col : m.columns()) {
      if (!col.is_zero()) CHECK(min_distance(code) <= col.weight());
    }
  }
}

TEST_CASE("schur product") {
  const auto x = BinaryVector::from_string("110");
  const auto y = BinaryVector::from_string("011");
  CHECK(schur_product(x, x) == x);
  CHECK(schur_product(x, y) == BinaryVector::from_string("010"));
  CHECK(schur_product(BinaryVector(3), y).is_zero());
  CHECK_ERROR(schur_product(x, BinaryVector(4)), kLengthMismatch);
}

TEST_CASE("weight of a sum") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    const auto x = oracle::random_vector(rng, n);
    const auto y = oracle::random_vector(rng, n);
    CHECK((x ^ y).weight() == x.weight() + y.weight() - 2 * schur_product(x, y).weight());
  }
}

TEST_CASE("schur closure of towers") {
  const Code c = Code(BinaryMatrix::from_rows({{1, 0}, {1, 1}, {1, 1}, {0, 1}}));
  const auto open = is_schur_closed_tower(CodeTower({c, c}));
  CHECK_FALSE(open.closed);
  REQUIRE(open.witness);
  CHECK(open.witness->level == 2);
  CHECK(open.witness->left == BinaryVector::from_string("1110"));
  CHECK(open.witness->right == BinaryVector::from_string("0111"));
  CHECK(open.witness->product == BinaryVector::from_string("0110"));
  CHECK_FALSE(c.contains(open.witness->product));

  CHECK(is_schur_closed_tower(CodeTower({c})).closed);
  CHECK(is_schur_closed_tower(CodeTower({reed_muller_code(2, 4), reed_muller_code(1, 4)})).closed);
  CHECK(is_schur_closed_tower(read_tower(CODELATTICE_DATA_DIR "/rm_tower.txt")).closed);
  CHECK_ERROR(CodeTower({reed_muller_code(1, 4), reed_muller_code(2, 4)}), kNotATower);
}

TEST_CASE("schur closure agrees with the all-pairs definition") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const auto g1 = oracle::random_matrix(rng, n, 1 + rng() % 4);
    const auto g2 = BinaryMatrix::from_columns(n, {g1.column(0)});
    const CodeTower tower({Code(g1), Code(g2)});
    bool closed = true;
    for (const auto& c : oracle::codewords(g2)) {
      for (const auto& c2 : oracle::codewords(g2)) {
        oracle::Bits p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = c[i] & c2[i];
        closed &= oracle::in_code(g1, p);
      }
    }
    CHECK(is_schur_closed_tower(tower).closed == closed);
  }
}

TEST_CASE("schur-closed codes have disjoint minimum-weight supports") {
  std::mt19937_64 rng(17);
  int closed_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 4 + rng() % 6;
    const auto m = oracle::random_matrix(rng, n, 1 + rng() % 4);
    if (rank(m) == 0) continue;
    const Code code(m);
    if (!is_schur_closed_tower(CodeTower({code, code})).closed) continue;
    ++closed_seen;
    const auto s = min_weight_codewords(code);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        CHECK(schur_product(s[i], s[j]).is_zero());
      }
    }
    CHECK(s.size() <= n);
  }
  CHECK(closed_seen > 0);
}

TEST_CASE("subcodes") {
  CHECK(is_subcode(identity_code(3), identity_code(3)));
  CHECK(is_subcode(Code(BinaryMatrix(3, 1)), repetition_code(3)));
  CHECK_FALSE(is_subcode(Code(BinaryMatrix::from_rows({{1}, {1}})),
                         Code(BinaryMatrix::from_rows({{1}, {0}}))));
  CHECK_ERROR(is_subcode(identity_code(2), identity_code(3)), kLengthMismatch);
}

TEST_CASE("completion to full rank") {
  CHECK(complete_to_full_rank(BinaryMatrix::identity(4), 0).cols() == 0);
  CHECK(complete_to_full_rank(BinaryMatrix(5, 0), 0) == BinaryMatrix::identity(5));

  const auto g = cor23_gadget(17);
  BinaryVector c1(67);
  for (std::size_t i = 0; i < 4; ++i) c1.set(i, true);
  const auto m = BinaryMatrix::from_columns(67, {c1}).hconcat(g.ka());
  const auto k0 = complete_to_full_rank(m, 0);
  CHECK(k0.cols() == 63);
  CHECK(rank(k0.hconcat(m)) == 67);
  for (const auto& col : k0.columns()) CHECK(col.weight() == 1);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto k = complete_to_full_rank(m, seed);
    CHECK(rank(k.hconcat(m)) == 67);
    CHECK(k == complete_to_full_rank(m, seed));
  }
}

TEST_CASE("row replication law") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 1 + rng() % 5;
    const auto a = oracle::random_matrix(rng, 1 + rng() % 5, k);
    const auto b = oracle::random_matrix(rng, 1 + rng() % 5, k);
    const std::size_t m = 1 + rng() % 6;
    const auto g = replicated_generator(a, b, m);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
      BinaryVector xv(k);
      for (std::size_t i = 0; i < k; ++i) xv.set(i, (x >> i) & 1);
      CHECK(g.multiply(xv).weight() ==
            a.multiply(xv).weight() + m * b.multiply(xv).weight());
    }
  }
}

TEST_CASE("Reed-Muller parameters") {
  CHECK(reed_muller_code(1, 4).rank() == 5);
  CHECK(min_distance(reed_muller_code(1, 4)) == 8);
  CHECK(reed_muller_code(2, 4).rank() == 11);
  CHECK(min_distance(reed_muller_code(2, 4)) == 4);
  const Code file1(read_binary_matrix(CODELATTICE_DATA_DIR "/rm24_C1.txt"));
  CHECK(codewords(file1) == codewords(reed_muller_code(2, 4)));
}
