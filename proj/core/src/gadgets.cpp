#include "codelattice/gadgets.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "codelattice/error.hpp"

namespace codelattice {
namespace {

constexpr std::size_t kMaxExhaustedKernel = 20;
constexpr std::size_t kMaxSignSupport = 24;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t pow4(std::size_t a) { return std::uint64_t{1} << (2 * a); }

// bar M · z over the integers.
IntVector embedded_product(const BinaryMatrix& m, const IntVector& z) {
  IntVector out(m.rows(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(z[c]) == 0) continue;
    for (std::size_t r : m.column(c).support()) out[r] += z[c];
  }
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

// Every vector in the span of `basis` (2^dim of them, dim <= cap).
std::vector<BinaryVector> span_elements(const std::vector<BinaryVector>& basis,
                                        std::size_t length) {
  if (basis.size() > kMaxExhaustedKernel) {
    throw Error(ErrorCode::kRankTooLarge,
                "kernel of dimension " + std::to_string(basis.size()) +
                    " is too large to exhaust");
  }
  std::vector<BinaryVector> out;
  out.reserve(std::size_t{1} << basis.size());
  out.emplace_back(length);
  for (const auto& b : basis) {
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

Json binary_list(const std::vector<BinaryVector>& vectors) {
  Json out = Json::array();
  for (const auto& v : vectors) out.push_back(to_json(v));
  return out;
}

Json lp_value(const LpPower& power) {
  if (auto exact = power.exact()) return to_json(*exact);
  return Json(power.approx());
}

void copy_hypotheses(VerificationReport& into, const VerificationReport& from) {
  for (const auto& h : from.hypotheses) into.hypotheses.push_back(h);
}

std::size_t distance_or_zero(const Code& code) {
  return code.rank() == 0 ? 0 : min_distance(code);
}

}  // namespace

BinaryMatrix replicated_generator(const BinaryMatrix& a, const BinaryMatrix& b,
                                  std::size_t m) {
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "A has " + std::to_string(a.cols()) + " columns, B has " +
                    std::to_string(b.cols()));
  }
  return a.vstack(b.replicate_rows(m));
}

Thm22Gadget cor23_gadget(std::size_t m) {
  Thm22Gadget g;
  g.a = BinaryMatrix(16, 3);
  for (std::size_t r = 0; r < 14; ++r) g.a.set(r, 0, true);
  g.a.set(14, 1, true);
  g.a.set(15, 2, true);
  g.b = BinaryMatrix::from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  g.w = BinaryVector::ones(3);
  g.depth = 2;
  g.m = m;
  return g;
}

VerificationReport check_thm22_hypotheses(const Thm22Gadget& g) {
  const Stopwatch clock;
  const std::size_t k = g.a.cols();
  if (k == 0 || g.b.cols() != k || g.w.size() != k) {
    throw Error(ErrorCode::kShapeMismatch,
                "A, B and w must agree on k >= 1 columns");
  }
  VerificationReport report;
  report.theorem = "thm22";
  report.params = {{"n1", g.a.rows()}, {"n2", g.b.rows()}, {"k", k},
                   {"a", g.depth},     {"m", g.m},          {"n", g.length()}};

  const bool params_ok = g.depth >= 2 && g.depth < 32 && g.m > pow4(g.depth) &&
                         g.a.rows() >= 1 && g.b.rows() >= 1 && !g.w.is_zero();
  report.hypothesis("a >= 2, m > 4^a, w != 0", params_ok,
                    params_ok ? Json(nullptr)
                              : Json{{"a", g.depth}, {"m", g.m}, {"w", to_json(g.w)}});

  const std::size_t aw = g.a.multiply(g.w).weight();
  const bool item1 = g.depth < 32 && aw == pow4(g.depth);
  report.hypothesis("|A w| = 4^a", item1, item1 ? Json(nullptr) : Json{{"weight", aw}});
  report.exact_values["weight_Aw"] = aw;

  const auto kernel = kernel_basis(g.b);
  const bool item2 = kernel.size() == 1 && kernel.front() == g.w;
  report.hypothesis("ker B = {0, w}", item2,
                    item2 ? Json(nullptr) : Json{{"kernel_basis", binary_list(kernel)}});

  // bar B (bar w + 2t) mod 4 depends only on t mod 2, so t in {0,1}^k suffices.
  if (k > kMaxExhaustedKernel) {
    throw Error(ErrorCode::kRankTooLarge, "k too large for the mod-4 check");
  }
  std::optional<IntVector> item3_witness;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << k) && !item3_witness; ++t) {
    IntVector y(k);
    for (std::size_t i = 0; i < k; ++i) {
      y[i] = (g.w.get(i) ? 1 : 0) + ((t >> i) & 1 ? 2 : 0);
    }
    const IntVector by = embedded_product(g.b, y);
    const bool all_zero = std::all_of(by.begin(), by.end(), [](const Integer& x) {
      return mpz_divisible_2exp_p(x.get_mpz_t(), 2) != 0;
    });
    if (all_zero) item3_witness = y;
  }
  report.hypothesis("bar B y mod 4 != 0 for y in 2Z^k + bar w", !item3_witness,
                    item3_witness ? Json{{"y", to_json(*item3_witness)}} : Json(nullptr));
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

Thm22Instance build_thm22(const Thm22Gadget& gadget, std::uint64_t seed) {
  if (!check_thm22_hypotheses(gadget).hypotheses_pass()) {
    throw Error(ErrorCode::kHypothesesFail, "gadget hypotheses fail");
  }
  Thm22Instance inst;
  inst.gadget = gadget;
  const BinaryMatrix ka = gadget.ka();
  const std::size_t n = ka.rows();
  const auto order = seeded_permutation(n, seed);

  BinaryMatrix upper(n, 0);
  for (std::size_t i = 1; i < gadget.depth; ++i) {
    const std::size_t weight = pow4(i);
    if (weight > n) {
      throw Error(ErrorCode::kShapeMismatch, "n too small for |c_i| = 4^i");
    }
    BinaryVector c(n);
    for (std::size_t j = 0; j < weight; ++j) c.set(order[j], true);
    inst.c_list.push_back(c);
    upper = upper.hconcat(BinaryMatrix::from_columns(n, {std::move(c)}));
  }
  upper = upper.hconcat(ka);
  inst.k0 = complete_to_full_rank(upper, seed);
  inst.code = Code(ka);
  inst.lattice = vladut_special_d(inst.k0, inst.c_list, ka, gadget.depth);
  return inst;
}

Thm22Instance build_cor23(std::size_t m, std::uint64_t seed) {
  if (m <= 16) {
    throw Error(ErrorCode::kInvalidArgument, "m must exceed 16");
  }
  Thm22Instance inst = build_thm22(cor23_gadget(m), seed);
  const std::size_t d = min_distance(inst.code);
  if (d != 16) {
    throw Error(ErrorCode::kHypothesesFail,
                "d(C(K_2)) = " + std::to_string(d) + ", expected 16");
  }
  return inst;
}

std::vector<IntVector> ternary_sign_search(const Lattice& lattice,
                                           const Code& code, std::size_t bound,
                                           unsigned workers) {
  const std::size_t n = lattice.dimension();
  if (code.length() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "lattice and code lengths differ");
  }
  for (const auto& b : lattice.basis()) {
    if (!code.contains(mod2(b))) {
      throw Error(ErrorCode::kUnsupportedLattice,
                  "lattice does not reduce into the code modulo 2");
    }
  }
  if (bound == 0 || code.rank() == 0) return {};

  const auto candidates = codewords_up_to_weight(code, bound * bound);
  for (const auto& c : candidates) {
    if (c.weight() > kMaxSignSupport) {
      throw Error(ErrorCode::kSupportTooLarge,
                  "candidate support of size " + std::to_string(c.weight()));
    }
  }

  std::vector<IntVector> found;
  std::mutex found_mutex;
  for (const auto& c : candidates) {
    const auto support = c.support();
    const std::uint64_t patterns = std::uint64_t{1} << support.size();
    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), patterns));
    std::vector<std::exception_ptr> errors(threads);

    auto scan = [&](unsigned id) {
      try {
        std::vector<IntVector> local;
        IntVector v(n, 0);
        for (std::uint64_t mask = id; mask < patterns; mask += threads) {
          for (std::size_t j = 0; j < support.size(); ++j) {
            v[support[j]] = (mask >> j) & 1 ? -1 : 1;
          }
          if (contains(lattice, v)) local.push_back(v);
        }
        const std::lock_guard lock(found_mutex);
        for (auto& v2 : local) found.push_back(std::move(v2));
      } catch (...) {
        errors[id] = std::current_exception();
      }
    };
    if (threads == 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < threads; ++id) pool.emplace_back(scan, id);
      for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  sort_canonical(found);
  return found;
}

Thm24Gadget cor25_gadget(std::size_t m) {
  Thm24Gadget g;
  g.a = BinaryMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
  g.b = BinaryMatrix::from_rows(
      {{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}});
  g.z = make_int_vector({1, 1, -1, -1});
  g.m = m;
  return g;
}

VerificationReport check_thm24_hypotheses(const Thm24Gadget& g) {
  const Stopwatch clock;
  const std::size_t l = g.a.cols();
  if (l == 0 || g.b.cols() != l || g.z.size() != l || g.a.rows() == 0 ||
      g.b.rows() == 0) {
    throw Error(ErrorCode::kShapeMismatch,
                "A, B and z must agree on l >= 1 columns");
  }
  VerificationReport report;
  report.theorem = "thm24";
  report.params = {{"n1", g.a.rows()}, {"n2", g.b.rows()}, {"l", l}, {"m", g.m}};

  const Code ca(g.a);
  const Code cb(g.b);
  const std::size_t da = distance_or_zero(ca);
  const std::size_t db = distance_or_zero(cb);
  report.exact_values["d_A"] = da;
  report.exact_values["d_B"] = db;

  Json bad_columns = Json::array();
  for (std::size_t i = 0; i < l; ++i) {
    if (da == 0 || db == 0 || g.a.column(i).weight() != da ||
        g.b.column(i).weight() != db) {
      bad_columns.push_back(i);
    }
  }
  report.hypothesis("every column of A and of B has minimum weight",
                    bad_columns.empty(),
                    bad_columns.empty() ? Json(nullptr) : Json{{"columns", bad_columns}});

  std::optional<BinaryVector> outside;
  for (const auto& x : kernel_basis(g.b)) {
    if (!g.a.multiply(x).is_zero()) {
      outside = x;
      break;
    }
  }
  report.hypothesis("ker B ⊆ ker A", !outside,
                    outside ? Json{{"x", to_json(*outside)}} : Json(nullptr));

  std::optional<BinaryVector> light;
  for (const auto& x : span_elements(kernel_basis(g.a), l)) {
    const BinaryVector bx = g.b.multiply(x);
    if (!bx.is_zero() && bx.weight() <= db) {
      light = x;
      break;
    }
  }
  report.hypothesis("|B x| > d(C(B)) for x in ker A \\ ker B", !light,
                    light ? Json{{"x", to_json(*light)}} : Json(nullptr));

  const IntVector bz = embedded_product(g.b, g.z);
  const IntVector az = embedded_product(g.a, g.z);
  const bool item4 = is_zero(bz) && !is_zero(az);
  report.hypothesis("bar B z = 0 and bar A z != 0", item4,
                    item4 ? Json(nullptr)
                          : Json{{"Bz", to_json(bz)}, {"Az", to_json(az)}});
  report.exact_values["Az"] = to_json(az);
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

std::size_t min_m(const Thm24Gadget& g, const Rational& p) {
  if (!check_thm24_hypotheses(g).hypotheses_pass()) {
    throw Error(ErrorCode::kHypothesesFail, "gadget hypotheses fail");
  }
  const std::size_t da = min_distance(Code(g.a));
  const std::size_t db = min_distance(Code(g.b));
  const LpPower power(embedded_product(g.a, g.z), p);
  std::size_t m = std::max<std::size_t>(da, 1);
  while (power.compare(Integer(static_cast<unsigned long>(da + m * db))) !=
         std::strong_ordering::less) {
    ++m;
  }
  return m;
}

VerificationReport verify_thm24(const Thm24Gadget& gadget, const Rational& p,
                                const EnumerationOptions& options) {
  const Stopwatch clock;
  VerificationReport report;
  report.theorem = "thm24";
  const VerificationReport hyp = check_thm24_hypotheses(gadget);
  copy_hypotheses(report, hyp);
  report.exact_values = hyp.exact_values;
  report.params = hyp.params;
  report.params["p"] = to_json(p);
  if (!report.hypotheses_pass()) {
    report.runtime_ms = clock.elapsed_ms();
    return report;
  }

  const std::size_t required = min_m(gadget, p);
  Thm24Gadget g = gadget;
  if (g.m == 0) g.m = required;
  report.params["m"] = g.m;
  report.exact_values["min_m"] = required;
  report.hypothesis("m >= min_m", g.m >= required,
                    g.m >= required ? Json(nullptr) : Json{{"min_m", required}});

  const std::size_t da = min_distance(Code(g.a));
  const std::size_t db = min_distance(Code(g.b));
  const BinaryMatrix gm = g.gm();
  const Code cm(gm);
  const std::size_t d = min_distance(cm);
  report.exact_values["n"] = gm.rows();
  report.exact_values["k"] = cm.rank();
  report.exact_values["d"] = d;
  report.conclusion("d(C_m) = d(C(A)) + m d(C(B))", d == da + g.m * db,
                    Json{{"d", d}, {"expected", da + g.m * db}});

  const auto shortest = min_weight_codewords(cm);
  report.exact_values["kappa0"] = shortest.size();
  bool columns_shortest = true;
  for (const auto& col : gm.columns()) {
    columns_shortest &= std::binary_search(shortest.begin(), shortest.end(), col);
  }
  report.conclusion("columns of G_m lie in S_C", columns_shortest);

  const Lattice lattice = simplified_d(cm);
  const IntVector witness = embedded_product(gm, g.z);
  const LpPower power(witness, p);
  const bool witness_ok =
      !is_zero(witness) && contains(lattice, witness) &&
      power.compare(Integer(static_cast<unsigned long>(d))) == std::strong_ordering::less;
  report.exact_values["witness_lp_power"] = lp_value(power);
  report.conclusion("nonzero member with |v|_p^p < d(C_m)", witness_ok,
                    Json{{"vector", to_json(witness)}, {"lp_power", lp_value(power)}});

  if (p == 2) {
    const ShortVectorReport svr = shortest_vectors(lattice, options);
    report.exact_values["lambda1_sq"] = to_json(svr.lambda1_sq);
    report.exact_values["kissing"] = svr.kissing;
    report.conclusion("lambda1^2 < d(C_m)", svr.lambda1_sq < static_cast<unsigned long>(d),
                      Json{{"lambda1_sq", to_json(svr.lambda1_sq)},
                           {"vector", to_json(svr.vectors.front())}});
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport golay_lp_check(const Rational& p, const EnumerationOptions& options) {
  if (p < 1 || p > 2) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in [1, 2]");
  }
  const Stopwatch clock;
  VerificationReport report;
  report.theorem = "golay-lp";
  report.params = {{"p", to_json(p)}};

  const Code golay = extended_golay_code();
  const std::size_t n = golay.length();
  const std::size_t d = min_distance(golay);
  const std::size_t kissing = code_kissing_number(golay);
  report.hypothesis("d = 8", d == 8, d == 8 ? Json(nullptr) : Json{{"d", d}});
  report.hypothesis("kappa0 = 759", kissing == 759,
                    kissing == 759 ? Json(nullptr) : Json{{"kappa0", kissing}});
  report.exact_values["d"] = d;
  report.exact_values["kappa0"] = kissing;
  if (!report.hypotheses_pass()) {
    report.runtime_ms = clock.elapsed_ms();
    return report;
  }
  const Lattice lattice = simplified_d(golay);
  const Integer target = static_cast<unsigned long>(d);

  std::vector<IntVector> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IntVector v(n, 0);
      v[i] = 2;
      v[j] = -2;
      if (contains(lattice, v)) pairs.push_back(std::move(v));
    }
  }
  report.exact_values["pair_members"] = pairs.size();

  if (p == 2) {
    // No strict witness can exist at p = 2; the claim is that 8 is the minimum.
    const auto shorter = vectors_up_to(lattice, target - 1, options);
    report.conclusion("no member with |v|_2^2 < 8", shorter.size() == 1,
                      Json{{"count", shorter.size() - 1}});
    report.runtime_ms = clock.elapsed_ms();
    return report;
  }

  std::optional<IntVector> witness;
  if (!pairs.empty()) {
    sort_canonical(pairs);
    witness = pairs.front();
  } else {
    // |v|_2 <= |v|_p for p <= 2, so |v|_p^p < 8 forces |v|_2^2 < 64^(1/p).
    const Integer num = p.get_num();
    const Integer den = p.get_den();
    Integer cap;
    mpz_pow_ui(cap.get_mpz_t(), Integer(64).get_mpz_t(), den.get_ui());
    Integer radius = 0;
    while (true) {
      Integer next_pow;
      mpz_pow_ui(next_pow.get_mpz_t(), Integer(radius + 1).get_mpz_t(), num.get_ui());
      if (next_pow >= cap) break;
      ++radius;
    }
    report.exact_values["search_radius_sq"] = to_json(radius);
    try {
      for (auto& v : vectors_up_to(lattice, radius, options)) {
        if (is_zero(v)) continue;
        if (LpPower(v, p).compare(target) == std::strong_ordering::less) {
          witness = std::move(v);
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEnumerationBudgetExceeded) throw;
      report.inconclusive = true;
      report.exact_values["search"] = "budget_exceeded";
    }
  }

  if (witness) {
    const LpPower power(*witness, p);
    const bool ok = contains(lattice, *witness) && power.compare(target) ==
                                                      std::strong_ordering::less;
    report.exact_values["witness_lp_power"] = lp_value(power);
    report.conclusion("member with |v|_p^p < 8", ok,
                      Json{{"vector", to_json(*witness)}, {"lp_power", lp_value(power)}});
  } else {
    // Not finding a witness is not a refutation of the claim.
    report.inconclusive = true;
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_thm22(const Thm22Gadget& gadget, std::uint64_t seed,
                                bool full_enum, const EnumerationOptions& options) {
  const Stopwatch clock;
  VerificationReport report;
  report.theorem = "thm22";
  const VerificationReport hyp = check_thm22_hypotheses(gadget);
  copy_hypotheses(report, hyp);
  report.params = hyp.params;
  report.params["seed"] = seed;
  report.params["full_enum"] = full_enum;
  if (!report.hypotheses_pass()) {
    report.runtime_ms = clock.elapsed_ms();
    return report;
  }

  const Thm22Instance inst = build_thm22(gadget, seed);
  const std::size_t target = pow4(gadget.depth);
  const std::size_t bound = std::size_t{1} << gadget.depth;
  Json c_list = Json::array();
  for (const auto& c : inst.c_list) c_list.push_back(to_json(c));
  report.exact_values["c"] = c_list;
  report.exact_values["lattice_rank"] = inst.lattice.rank();

  const std::size_t d = min_distance(inst.code);
  const auto shortest = min_weight_codewords(inst.code);
  report.exact_values["d"] = d;
  report.exact_values["kappa0"] = shortest.size();
  report.conclusion("d(C_a) = 4^a", d == target, Json{{"d", d}});

  const auto ternary =
      ternary_sign_search(inst.lattice, inst.code, bound, options.workers);
  report.exact_values["ternary_vectors"] = ternary.size();
  report.conclusion("no nonzero ternary member of norm <= 2^a", ternary.empty(),
                    ternary.empty() ? Json(nullptr)
                                    : Json{{"vector", to_json(ternary.front())}});

  Json members = Json::array();
  for (const auto& c : shortest) {
    if (contains(inst.lattice, embed(c))) members.push_back(to_json(c));
  }
  report.conclusion("bar c not in L_D for every minimum-weight c", members.empty(),
                    members.empty() ? Json(nullptr) : Json{{"codewords", members}});

  if (full_enum) {
    try {
      const auto vectors =
          vectors_up_to(inst.lattice, static_cast<unsigned long>(target), options);
      std::optional<IntVector> ternary_member;
      Integer min_norm = 0;
      std::size_t at_min = 0;
      for (const auto& v : vectors) {
        if (is_zero(v)) continue;
        const Integer norm = squared_norm(v);
        if (at_min == 0 || norm < min_norm) {
          min_norm = norm;
          at_min = 0;
        }
        if (norm == min_norm) ++at_min;
        const bool tern = std::all_of(v.begin(), v.end(), [](const Integer& x) {
          return abs(x) <= 1;
        });
        if (tern && !ternary_member) ternary_member = v;
      }
      report.exact_values["full_enum"] = {{"vectors", vectors.size()},
                                          {"lambda1_sq", to_json(min_norm)},
                                          {"kissing", at_min}};
      report.conclusion("full enumeration finds no ternary member", !ternary_member,
                        ternary_member ? Json{{"vector", to_json(*ternary_member)}}
                                       : Json(nullptr));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEnumerationBudgetExceeded) throw;
      report.exact_values["full_enum"] = "budget_exceeded";
    }
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_cor23(std::size_t m, std::uint64_t seed, bool full_enum,
                                const EnumerationOptions& options) {
  const Stopwatch clock;
  if (m <= 16) {
    throw Error(ErrorCode::kInvalidArgument, "m must exceed 16");
  }
  VerificationReport report = verify_thm22(cor23_gadget(m), seed, full_enum, options);
  report.theorem = "cor23";
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_cstar_collapse(const Code& code,
                                         const EnumerationOptions& options) {
  const Stopwatch clock;
  const std::size_t n = code.length();
  if (n == 0 || n > 8) {
    throw Error(ErrorCode::kInvalidArgument, "C* collapse check needs 1 <= n <= 8");
  }
  VerificationReport report;
  report.theorem = "cstar-collapse";
  report.params = {{"n", n}, {"k", code.rank()}};

  const Lattice definitional = construction_c_star_definitional(code);
  const Lattice collapsed = scale(construction_a(code), Integer(1) << (n - 1));
  report.conclusion("L_C* = 2^(n-1) L_A", lattices_equal(definitional, collapsed));

  const std::size_t d = code.rank() == 0 ? 4 : std::min<std::size_t>(min_distance(code), 4);
  const Integer expected = (Integer(1) << (2 * (n - 1))) * static_cast<unsigned long>(d);
  const ShortVectorReport svr = shortest_vectors(definitional, options);
  report.exact_values["lambda1_sq"] = to_json(svr.lambda1_sq);
  report.exact_values["kissing"] = svr.kissing;
  report.conclusion("lambda1^2 = 4^(n-1) min(d, 4)", svr.lambda1_sq == expected,
                    Json{{"expected", to_json(expected)}});
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_dbar_schur(const CodeTower& tower) {
  const Stopwatch clock;
  VerificationReport report;
  report.theorem = "dbar-schur";
  report.params = {{"n", tower.length()}, {"a", tower.depth()}};

  const SchurClosure schur = is_schur_closed_tower(tower);
  const DBarLatticeCheck dbar = d_bar_is_lattice(tower);
  report.exact_values["schur_closed"] = schur.closed;
  report.exact_values["verdict"] = dbar.is_lattice ? "lattice" : "not a lattice";
  report.exact_values["cosets"] = dbar.cosets;
  if (schur.witness) {
    report.exact_values["schur_witness"] = {{"level", schur.witness->level},
                                            {"left", to_json(schur.witness->left)},
                                            {"right", to_json(schur.witness->right)},
                                            {"product", to_json(schur.witness->product)}};
  }
  report.conclusion("D-bar is a lattice iff the tower is Schur-closed",
                    dbar.is_lattice == schur.closed);
  if (dbar.witness) {
    bool valid = contains(dbar.generated, *dbar.witness) &&
                       !d_bar_member(tower, *dbar.witness);
    Json certificate = {{"vector", to_json(*dbar.witness)}};
    if (dbar.summands) {
      const auto& [u, w] = *dbar.summands;
      valid = valid && d_bar_member(tower, u) && d_bar_member(tower, w);
      certificate["summands"] = {to_json(u), to_json(w)};
    }
    report.exact_values["witness"] = to_json(*dbar.witness);
    report.conclusion("witness lies in the generated lattice but not in D-bar", valid,
                      std::move(certificate));
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace codelattice
