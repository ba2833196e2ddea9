#include <doctest.h>

#include <random>

#include "codelattice/gadgets.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace codelattice;

namespace {

IntVector iv(std::initializer_list<long> e) { return make_int_vector(e); }

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* find_check(const std::vector<Check>& checks, const std::string& prefix) {
  for (const auto& c : checks) {
    if (c.name.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

bool ternary(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return abs(x) <= 1; });
}

}  // namespace

TEST_CASE("cor23 gadget satisfies the thm22 hypotheses") {
  const Thm22Gadget g = cor23_gadget();
  CHECK(g.length() == 67);
  CHECK(g.ka().rows() == 67);
  const VerificationReport r = check_thm22_hypotheses(g);
  CHECK(r.hypotheses.size() == 4);
  CHECK(all_pass(r.hypotheses));
  CHECK(r.exact_values["weight_Aw"] == 16);
}

TEST_CASE("thm22 negative controls") {
  Thm22Gadget zero_b = cor23_gadget();
  zero_b.b = BinaryMatrix(3, 3);
  const auto r1 = check_thm22_hypotheses(zero_b);
  CHECK_FALSE(find_check(r1.hypotheses, "ker B")->pass);
  CHECK(find_check(r1.hypotheses, "|A w|")->pass);

  Thm22Gadget unit = cor23_gadget();
  unit.w = BinaryVector::unit(3, 0);
  const auto r2 = check_thm22_hypotheses(unit);
  CHECK_FALSE(find_check(r2.hypotheses, "|A w|")->pass);
  CHECK(r2.exact_values["weight_Aw"] == 14);

  Thm22Gadget small_m = cor23_gadget(16);
  CHECK_FALSE(find_check(check_thm22_hypotheses(small_m).hypotheses, "a >= 2")->pass);
  CHECK_ERROR(build_thm22(small_m), kHypothesesFail);

  // B = I_3 has trivial kernel and B w = w is odd everywhere, so only item 2 fails.
  Thm22Gadget identity_b = cor23_gadget();
  identity_b.b = BinaryMatrix::identity(3);
  const auto r3 = check_thm22_hypotheses(identity_b);
  CHECK_FALSE(find_check(r3.hypotheses, "ker B")->pass);
  CHECK(find_check(r3.hypotheses, "bar B y")->pass);

  // y = (3, 1, 0) gives bar B y = (4, 4, 0).
  Thm22Gadget mod4 = cor23_gadget();
  mod4.b = BinaryMatrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
  mod4.w = BinaryVector::from_string("110");
  CHECK_FALSE(find_check(check_thm22_hypotheses(mod4).hypotheses, "bar B y")->pass);

  Thm22Gadget shapes = cor23_gadget();
  shapes.w = BinaryVector::ones(4);
  CHECK_ERROR(check_thm22_hypotheses(shapes), kShapeMismatch);
}

TEST_CASE("the mod-4 reduction depends only on t mod 2") {
  const Thm22Gadget g = cor23_gadget();
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int trial = 0; trial < 100; ++trial) {
    IntVector t(3), t2(3);
    for (std::size_t i = 0; i < 3; ++i) {
      t[i] = dist(rng);
      t2[i] = ((t[i] % 2) + 2) % 2;
    }
    auto value = [&](const IntVector& s) {
      IntVector out(3, 0);
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
          if (g.b.get(r, c)) out[r] += (g.w.get(c) ? 1 : 0) + 2 * s[c];
        }
        out[r] = ((out[r] % 4) + 4) % 4;
      }
      return out;
    };
    CHECK(value(t) == value(t2));
  }
}

TEST_CASE("cor23 instance") {
  const Thm22Instance inst = build_cor23();
  CHECK(inst.code.length() == 67);
  CHECK(min_distance(inst.code) == 16);
  CHECK(code_kissing_number(inst.code) == 1);
  CHECK(inst.c_list.size() == 1);
  CHECK(inst.c_list.front().weight() == 4);
  CHECK(inst.c_list.front().support() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(inst.lattice.is_full_rank());
  IntVector e(67, 0);
  e[0] = 4;
  CHECK(contains(inst.lattice, e));
  CHECK_ERROR(build_cor23(16), kInvalidArgument);

  const auto ternary_found = ternary_sign_search(inst.lattice, inst.code, 4);
  CHECK(ternary_found.empty());
  for (const auto& c : min_weight_codewords(inst.code)) CHECK_FALSE(contains(inst.lattice, embed(c)));

  // Negative control: Construction A of the same code contains the embedded codeword.
  const auto in_a = ternary_sign_search(construction_a(inst.code), inst.code, 4);
  CHECK(in_a.size() >= 2);
  for (const auto& v : in_a) CHECK(squared_norm(v) == 16);
}

TEST_CASE("cor23 holds across seeds") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const VerificationReport r = verify_cor23(17, seed);
    CHECK(r.verdict() == "PASS");
    const Thm22Instance inst = build_cor23(17, seed);
    CHECK(inst.c_list.front().weight() == 4);
  }
}

TEST_CASE("ternary search bounds and errors") {
  const Code rep3 = repetition_code(3);
  const Lattice la = construction_a(rep3);
  CHECK(ternary_sign_search(la, rep3, 0).empty());
  const auto found = ternary_sign_search(la, rep3, 2);
  CHECK(found.size() == 8);
  CHECK_ERROR(ternary_sign_search(la, repetition_code(4), 2), kDimensionMismatch);
  CHECK_ERROR(ternary_sign_search(integer_lattice(3), rep3, 2), kUnsupportedLattice);
  CHECK_ERROR(ternary_sign_search(construction_a(repetition_code(25)), repetition_code(25), 5),
              kSupportTooLarge);
}

TEST_CASE("ternary search is complete on Construction A lattices") {
  std::mt19937_64 rng(42);
  int tested = 0;
  while (tested < 25) {
    const std::size_t n = 2 + rng() % 11;
    const Code code(oracle::random_matrix(rng, n, 1 + rng() % 4));
    if (code.rank() == 0 || min_distance(code) > 4) continue;
    ++tested;
    const Lattice la = construction_a(code);
    for (std::size_t bound : {1, 2}) {
      std::vector<IntVector> expected;
      for (auto& v : vectors_up_to(la, bound * bound)) {
        if (ternary(v) && squared_norm(v) > 0) expected.push_back(v);
      }
      CHECK(ternary_sign_search(la, code, bound, 1 + tested % 3) == expected);
    }
  }
}

TEST_CASE("thm24 hypotheses") {
  const Thm24Gadget g = cor25_gadget();
  const auto r = check_thm24_hypotheses(g);
  CHECK(all_pass(r.hypotheses));
  CHECK(r.exact_values["d_A"] == 1);
  CHECK(r.exact_values["d_B"] == 2);

  Thm24Gadget zero = g;
  zero.z = IntVector(4, 0);
  CHECK_FALSE(find_check(check_thm24_hypotheses(zero).hypotheses, "bar B z")->pass);
  CHECK_ERROR(min_m(zero), kHypothesesFail);

  Thm24Gadget same = g;
  same.a = g.b;
  CHECK_FALSE(find_check(check_thm24_hypotheses(same).hypotheses, "bar B z")->pass);

  Thm24Gadget wrong = g;
  wrong.z = IntVector(3, 1);
  CHECK_ERROR(check_thm24_hypotheses(wrong), kShapeMismatch);
}

TEST_CASE("minimum replication factor") {
  const Thm24Gadget g = cor25_gadget();
  CHECK(min_m(g) == 4);
  CHECK(min_m(g, 1) == 2);
  // 2 * 2^(3/2) ≈ 5.66 < 1 + 2m from m = 3.
  CHECK(min_m(g, Rational(3, 2)) == 3);

  // z = s (1, 1, -1, -1) gives bar A z = (2s, -2s).
  for (long scale = 1; scale <= 3; ++scale) {
    Thm24Gadget scaled = g;
    scaled.z = iv({scale, scale, -scale, -scale});
    CHECK(min_m(scaled) == static_cast<std::size_t>(4 * scale * scale));
    CHECK(min_m(scaled, 1) == static_cast<std::size_t>(2 * scale));
  }
  // bar B z = 0 forces z mod 2 into ker B ⊆ ker A, so bar A z is even.
  for (const auto& x : check_thm24_hypotheses(g).exact_values["Az"]) CHECK(x.get<long>() % 2 == 0);
}

TEST_CASE("thm24 family") {
  for (std::size_t m = 4; m <= 10; ++m) {
    const Thm24Gadget g = cor25_gadget(m);
    const Code cm(g.gm());
    CHECK(cm.length() == 2 + 4 * m);
    CHECK(min_distance(cm) == 1 + 2 * m);
  }
  const VerificationReport cor25 = verify_thm24(cor25_gadget(4));
  CHECK(cor25.verdict() == "PASS");
  CHECK(cor25.exact_values["n"] == 18);
  CHECK(cor25.exact_values["k"] == 3);
  CHECK(cor25.exact_values["d"] == 9);
  CHECK(cor25.exact_values["lambda1_sq"] == 8);
  CHECK(cor25.exact_values["witness_lp_power"] == 8);

  const VerificationReport m5 = verify_thm24(cor25_gadget(5));
  CHECK(m5.verdict() == "PASS");
  CHECK(m5.exact_values["d"] == 11);

  const VerificationReport p32 = verify_thm24(cor25_gadget(0), Rational(3, 2));
  CHECK(p32.verdict() == "PASS");
  CHECK(p32.params["m"] == 3);

  const VerificationReport low = verify_thm24(cor25_gadget(2));
  CHECK(low.verdict() == "FAIL");
  CHECK_FALSE(find_check(low.hypotheses, "m >= min_m")->pass);
}

TEST_CASE("row replication law") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 1 + rng() % 5;
    const BinaryMatrix a = oracle::random_matrix(rng, 1 + rng() % 5, k);
    const BinaryMatrix b = oracle::random_matrix(rng, 1 + rng() % 5, k);
    const std::size_t m = 1 + rng() % 6;
    const BinaryMatrix gm = replicated_generator(a, b, m);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
      const std::size_t lhs = oracle::weight(oracle::combine(gm, x));
      const std::size_t rhs =
          oracle::weight(oracle::combine(a, x)) + m * oracle::weight(oracle::combine(b, x));
      CHECK(lhs == rhs);
    }
  }
  CHECK_ERROR(replicated_generator(BinaryMatrix(2, 3), BinaryMatrix(2, 2), 2), kShapeMismatch);
}

TEST_CASE("Golay l_p check") {
  const VerificationReport p1 = golay_lp_check(1);
  CHECK(p1.verdict() == "PASS");
  CHECK(p1.exact_values["d"] == 8);
  CHECK(p1.exact_values["kappa0"] == 759);
  CHECK(p1.exact_values["pair_members"] == 276);
  CHECK(p1.exact_values["witness_lp_power"] == 4);

  const VerificationReport p32 = golay_lp_check(Rational(3, 2));
  CHECK(p32.verdict() == "PASS");
  CHECK(p32.exact_values["witness_lp_power"].get<double>() == doctest::Approx(5.656854));

  CHECK(golay_lp_check(2).verdict() == "PASS");
  CHECK_ERROR(golay_lp_check(Rational(1, 2)), kInvalidArgument);
}

TEST_CASE("C* and D-bar verifiers") {
  const auto cstar = verify_cstar_collapse(Code(BinaryMatrix::from_rows(
      {{1, 0}, {1, 1}, {0, 1}, {1, 1}, {1, 0}, {0, 0}})));
  CHECK(cstar.verdict() == "PASS");
  CHECK(cstar.exact_values["lambda1_sq"] == 3 * 1024);
  CHECK_ERROR(verify_cstar_collapse(identity_code(9)), kInvalidArgument);

  const Code c(BinaryMatrix::from_rows({{1, 0}, {1, 1}, {1, 1}, {0, 1}}));
  const auto open = verify_dbar_schur(CodeTower({c, c}));
  CHECK(open.verdict() == "PASS");
  CHECK(open.exact_values["verdict"] == "not a lattice");
  CHECK(open.exact_values["witness"] == Json::array({1, 2, 2, 1}));

  const auto closed = verify_dbar_schur(CodeTower({reed_muller_code(2, 4), reed_muller_code(1, 4)}));
  CHECK(closed.verdict() == "PASS");
  CHECK(closed.exact_values["verdict"] == "lattice");
}
