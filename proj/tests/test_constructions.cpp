#include <doctest.h>

#include <random>

#include "codelattice/constructions.hpp"
#include "codelattice/gadgets.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace codelattice;

namespace {

IntVector iv(std::initializer_list<long> e) { return make_int_vector(e); }

BinaryMatrix columns_of(const BinaryMatrix& m, std::size_t from, std::size_t to) {
  std::vector<BinaryVector> cols(m.columns().begin() + from, m.columns().begin() + to);
  return BinaryMatrix::from_columns(m.rows(), cols);
}

// Every vector of {-r..r}^n, visited in order.
template <class F>
void for_box(std::size_t n, long r, F&& f) {
  IntVector v(n, -r);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == r) v[i++] = -r;
    if (i == n) return;
    ++v[i];
  }
}

Code random_code(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  return Code(oracle::random_matrix(rng, n, k));
}

CodeTower nonclosed_tower() {
  const Code c(BinaryMatrix::from_rows({{1, 0}, {1, 1}, {1, 1}, {0, 1}}));
  return CodeTower({c, c});
}

}  // namespace

TEST_CASE("embedding and reduction") {
  const auto x = BinaryVector::from_string("1011");
  CHECK(embed(x) == iv({1, 0, 1, 1}));
  CHECK(mod2(iv({3, -2, -1, 4})) == BinaryVector::from_string("1010"));
  CHECK(mod2(embed(x)) == x);
  const auto cols = embed(BinaryMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK(cols == std::vector<IntVector>{iv({1, 1}), iv({0, 1})});
}

TEST_CASE("embedding identity over random pairs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    const auto c = oracle::random_vector(rng, n);
    const auto c2 = oracle::random_vector(rng, n);
    REQUIRE(embed_sum_identity_check(c, c2));
    // Independent evaluation of both sides.
    for (std::size_t i = 0; i < n; ++i) {
      const int lhs = c.get(i) != c2.get(i);
      const int rhs = int(c.get(i)) + int(c2.get(i)) - 2 * int(c.get(i) && c2.get(i));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("Construction A membership law") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const BinaryMatrix g = oracle::random_matrix(rng, n, rng() % 4);
    const Lattice la = construction_a(Code(g));
    CHECK(la.is_full_rank());
    for_box(n, 2, [&](const IntVector& v) {
      CHECK(contains(la, v) == oracle::in_code(g, oracle::bits_of(mod2(v))));
    });
  }
  CHECK(determinant(construction_a(extended_golay_code())).value == Integer(1) << 12);
}

TEST_CASE("Construction A shortest vectors") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const Code code = random_code(rng, n, 1 + rng() % n);
    if (code.rank() == 0) continue;
    const std::size_t d = min_distance(code);
    const ShortVectorReport r = shortest_vectors(construction_a(code));
    CHECK(r.lambda1_sq == std::min<std::size_t>(d, 4));
    if (d >= 5) CHECK(r.kissing == 2 * n);
    if (d < 4) CHECK(r.kissing == (std::size_t{1} << d) * code_kissing_number(code));
  }
  const ShortVectorReport rep5 = shortest_vectors(construction_a(repetition_code(5)));
  CHECK(rep5.lambda1_sq == 4);
  CHECK(rep5.kissing == 10);
}

TEST_CASE("depth-one Construction D with a unimodular generator is Construction A") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const std::size_t k = 1 + rng() % (n - 1);
    // K_1 = [I_k; P], K_0 = [0; I_(n-k)]: the embedded n x n matrix is
    // lower block-triangular with unit diagonal.
    BinaryMatrix k1(n, k);
    BinaryMatrix k0(n, n - k);
    for (std::size_t j = 0; j < k; ++j) {
      k1.set(j, j, true);
      for (std::size_t i = k; i < n; ++i) k1.set(i, j, rng() & 1);
    }
    for (std::size_t j = 0; j < n - k; ++j) k0.set(k + j, j, true);
    DTowerInput input;
    input.blocks = {k0, k1};
    CHECK(construction_d(input, false) == construction_a(Code(k1)));
  }
}

TEST_CASE("strict Construction D has lambda_1 = 2^a") {
  {
    DTowerInput input = DTowerInput::complete({reed_muller_code(1, 3).generator()}, 0);
    const ShortVectorReport r = shortest_vectors(construction_d(input, true));
    CHECK(r.lambda1_sq == 4);
  }
  {
    const BinaryMatrix rm24 = reed_muller_code(2, 4).generator();
    const BinaryMatrix ones = columns_of(rm24, 0, 1);
    REQUIRE(ones.column(0).weight() == 16);
    DTowerInput input = DTowerInput::complete({columns_of(rm24, 1, rm24.cols()), ones}, 0);
    const Lattice l = construction_d(input, true);
    CHECK(l.is_full_rank());
    CHECK(shortest_vectors(l).lambda1_sq == 16);
  }
  CHECK_ERROR(construction_d(DTowerInput::complete({repetition_code(3).generator()}, 0), true),
              kTowerViolation);
  DTowerInput short_input;
  short_input.blocks = {BinaryMatrix::identity(4)};
  CHECK_ERROR(construction_d(short_input, false), kShapeMismatch);
  DTowerInput singular;
  singular.blocks = {BinaryMatrix(8, 4), reed_muller_code(1, 3).generator()};
  CHECK_ERROR(construction_d(singular, true), kTowerViolation);
}

TEST_CASE("special Construction D validation") {
  const BinaryMatrix ka = BinaryMatrix::from_rows({{1}, {1}, {1}, {1}, {1}});
  BinaryVector c1 = BinaryVector::from_string("11110");
  const BinaryMatrix k0 = columns_of(BinaryMatrix::identity(5), 0, 3);
  const Lattice l = vladut_special_d(k0, {c1}, ka, 2);
  CHECK(l.is_full_rank());
  CHECK(contains(l, iv({1, 1, 1, 1, 1})));
  CHECK(contains(l, iv({2, 2, 2, 2, 0})));
  CHECK_FALSE(contains(l, iv({2, 2, 0, 0, 0})));

  CHECK_ERROR(vladut_special_d(k0, {BinaryVector::from_string("11100")}, ka, 2), kWeightViolation);
  CHECK_ERROR(vladut_special_d(k0, {c1}, ka, 3), kShapeMismatch);
  CHECK_ERROR(vladut_special_d(k0, {BinaryVector::from_string("1111")}, ka, 2), kShapeMismatch);
  const BinaryMatrix bad_k0 = BinaryMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK_ERROR(vladut_special_d(bad_k0, {c1}, ka, 2), kNotFullRank);
}

TEST_CASE("simplified D never exceeds the minimum distance") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const Code code = random_code(rng, n, 1 + rng() % n);
    if (code.rank() == 0) continue;
    const Lattice l = simplified_d(code);
    for (const auto& c : min_weight_codewords(code)) CHECK(contains(l, embed(c)));
    CHECK(shortest_vectors(l).lambda1_sq <= min_distance(code));
  }
  const Lattice cor25 = simplified_d(Code(cor25_gadget(4).gm()));
  CHECK(shortest_vectors(cor25).lambda1_sq == 8);
  CHECK(contains(cor25, iv({2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("Construction C* collapses to a scaled Construction A") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Code code = random_code(rng, n, rng() % (n + 1));
    const Lattice direct = construction_c_star_definitional(code);
    const Lattice la = construction_a(code);
    CHECK(lattices_equal(direct, scale(la, Integer(1) << (n - 1))));
    CHECK(construction_c_star(code) == direct);
  }
  CHECK_ERROR(construction_c_star(identity_code(33)), kInvalidArgument);
  CHECK(construction_c_star(identity_code(20)) == scale(integer_lattice(20), Integer(1) << 19));
}

TEST_CASE("D-bar membership by digit peeling") {
  const CodeTower tower = nonclosed_tower();
  CHECK(d_bar_member(tower, iv({1, 1, 1, 0})));
  CHECK(d_bar_member(tower, iv({0, 1, 1, 1})));
  CHECK(d_bar_member(tower, iv({4, 0, -4, 0})));
  CHECK(d_bar_member(tower, iv({2, 2, 2, 0})));
  CHECK_FALSE(d_bar_member(tower, iv({1, 2, 2, 1})));
  CHECK_FALSE(d_bar_member(tower, iv({1, 0, 0, 0})));
  CHECK_FALSE(d_bar_member(tower, iv({2, 0, 0, 0})));
  CHECK_ERROR(d_bar_member(tower, iv({1, 1})), kDimensionMismatch);

  const auto dec = d_bar_member(tower, iv({5, 3, 3, -2}));
  REQUIRE(dec);
  // 5,3,3,-2 = (1,1,1,0) + 2(0,1,1,1) + 4(1,0,0,-1)
  CHECK(dec->codewords.size() == 2);
  CHECK(dec->codewords[0] == BinaryVector::from_string("1110"));
  CHECK(dec->codewords[1] == BinaryVector::from_string("0111"));
  CHECK(dec->tail == iv({1, 0, 0, -1}));
}

TEST_CASE("D-bar lattice test on the non-closed tower") {
  const DBarLatticeCheck r = d_bar_is_lattice(nonclosed_tower());
  CHECK_FALSE(r.is_lattice);
  REQUIRE(r.witness);
  CHECK(*r.witness == iv({1, 2, 2, 1}));
  REQUIRE(r.summands);
  CHECK(d_bar_member(nonclosed_tower(), r.summands->first));
  CHECK(d_bar_member(nonclosed_tower(), r.summands->second));
  CHECK(contains(r.generated, *r.witness));
  CHECK_ERROR(d_bar_is_lattice(nonclosed_tower(), 1), kQuotientTooLarge);
}

TEST_CASE("D-bar is a lattice exactly for Schur-closed towers") {
  CHECK(d_bar_is_lattice(CodeTower({reed_muller_code(2, 4), reed_muller_code(1, 4)})).is_lattice);
  CHECK(d_bar_is_lattice(CodeTower({repetition_code(5)})).is_lattice);

  std::mt19937_64 rng(37);
  int closed = 0;
  int open = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const BinaryMatrix g2 = oracle::random_matrix(rng, n, rng() % 3);
    const BinaryMatrix g1 = g2.hconcat(oracle::random_matrix(rng, n, rng() % 3));
    const CodeTower tower({Code(g1), Code(g2)});
    const bool schur = is_schur_closed_tower(tower).closed;
    const DBarLatticeCheck r = d_bar_is_lattice(tower);
    CHECK(r.is_lattice == schur);
    (schur ? closed : open)++;
    if (!r.is_lattice) {
      REQUIRE(r.witness);
      CHECK_FALSE(d_bar_member(tower, *r.witness));
      CHECK(contains(r.generated, *r.witness));
    }
  }
  CHECK(closed > 5);
  CHECK(open > 5);
}
