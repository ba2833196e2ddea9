#include "codelattice/constructions.hpp"

#include "codelattice/error.hpp"

namespace codelattice {
namespace {

Integer power_of_two(std::size_t e) { return Integer(1) << e; }

IntVector scaled_embedding(const BinaryVector& x, const Integer& factor) {
  IntVector v(x.size(), 0);
  for (std::size_t i : x.support()) v[i] = factor;
  return v;
}

void add_scaled_unit_vectors(GeneratingSet& gens, const Integer& factor) {
  for (std::size_t i = 0; i < gens.dimension; ++i) {
    IntVector e(gens.dimension, 0);
    e[i] = factor;
    gens.add(std::move(e));
  }
}

}  // namespace

IntVector embed(const BinaryVector& x) { return scaled_embedding(x, 1); }

std::vector<IntVector> embed(const BinaryMatrix& m) {
  std::vector<IntVector> out;
  out.reserve(m.cols());
  for (const auto& c : m.columns()) out.push_back(embed(c));
  return out;
}

BinaryVector mod2(const IntVector& v) {
  BinaryVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (mpz_odd_p(v[i].get_mpz_t())) out.set(i, true);
  }
  return out;
}

bool embed_sum_identity_check(const BinaryVector& c, const BinaryVector& c2) {
  const BinaryVector product = schur_product(c, c2);  // checks lengths
  const IntVector lhs = embed(c ^ c2);
  const IntVector a = embed(c);
  const IntVector b = embed(c2);
  const IntVector p = embed(product);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != a[i] + b[i] - 2 * p[i]) return false;
  }
  return true;
}

Lattice construction_a(const Code& code) {
  GeneratingSet gens(code.length());
  for (const auto& g : code.generator().columns()) gens.add(embed(g));
  add_scaled_unit_vectors(gens, 2);
  return hnf(gens);
}

DTowerInput DTowerInput::complete(std::vector<BinaryMatrix> upper_blocks,
                                  std::uint64_t seed) {
  if (upper_blocks.empty()) {
    throw Error(ErrorCode::kShapeMismatch, "Construction D needs K_1..K_a");
  }
  BinaryMatrix all = upper_blocks.front();
  for (std::size_t i = 1; i < upper_blocks.size(); ++i) {
    all = all.hconcat(upper_blocks[i]);
  }
  DTowerInput input;
  input.blocks.push_back(complete_to_full_rank(all, seed));
  for (auto& b : upper_blocks) input.blocks.push_back(std::move(b));
  return input;
}

Lattice construction_d(const DTowerInput& input, bool strict) {
  if (input.blocks.size() < 2) {
    throw Error(ErrorCode::kShapeMismatch,
                "Construction D needs blocks K_0..K_a with a >= 1");
  }
  const std::size_t n = input.blocks.front().rows();
  for (const auto& block : input.blocks) {
    if (block.rows() != n) {
      throw Error(ErrorCode::kShapeMismatch,
                  "Construction D blocks have different row counts");
    }
  }
  const std::size_t a = input.depth();

  if (strict) {
    BinaryMatrix g0 = input.blocks.front();
    for (std::size_t i = 1; i <= a; ++i) g0 = g0.hconcat(input.blocks[i]);
    if (g0.cols() != n || rank(g0) != n) {
      throw Error(ErrorCode::kTowerViolation,
                  "(K_0 | ... | K_a) is not an invertible n x n matrix");
    }
    // C_i = span(K_i, ..., K_a); build from the top level down.
    BinaryMatrix level = input.blocks[a];
    for (std::size_t i = a; i >= 1; --i) {
      if (i < a) level = input.blocks[i].hconcat(level);
      const Code code(level);
      const std::size_t required = std::size_t{1} << (2 * i);
      if (code.rank() == 0 || min_distance(code) < required) {
        throw Error(ErrorCode::kTowerViolation,
                    "d(C_" + std::to_string(i) + ") < 4^" + std::to_string(i));
      }
    }
  }

  GeneratingSet gens(n);
  for (std::size_t i = 0; i <= a; ++i) {
    const Integer factor = power_of_two(a - i);
    for (const auto& col : input.blocks[i].columns()) {
      gens.add(scaled_embedding(col, factor));
    }
  }
  return hnf(gens);
}

Lattice vladut_special_d(const BinaryMatrix& k0,
                         const std::vector<BinaryVector>& c_list,
                         const BinaryMatrix& ka, std::size_t a) {
  if (a < 1 || c_list.size() + 1 != a) {
    throw Error(ErrorCode::kShapeMismatch,
                "expected a - 1 = " + std::to_string(a == 0 ? 0 : a - 1) +
                    " intermediate vectors, got " + std::to_string(c_list.size()));
  }
  const std::size_t n = ka.rows();
  DTowerInput input;
  input.blocks.push_back(k0);
  for (std::size_t i = 0; i < c_list.size(); ++i) {
    const std::size_t expected = std::size_t{1} << (2 * (i + 1));
    if (c_list[i].size() != n) {
      throw Error(ErrorCode::kShapeMismatch, "c_i has the wrong length");
    }
    if (c_list[i].weight() != expected) {
      throw Error(ErrorCode::kWeightViolation,
                  "|c_" + std::to_string(i + 1) + "| = " +
                      std::to_string(c_list[i].weight()) + ", expected " +
                      std::to_string(expected));
    }
    input.blocks.push_back(BinaryMatrix::from_columns(n, {c_list[i]}));
  }
  input.blocks.push_back(ka);

  BinaryMatrix g0 = k0;
  if (g0.rows() != n) {
    throw Error(ErrorCode::kShapeMismatch, "K_0 and K_a row counts differ");
  }
  for (std::size_t i = 1; i < input.blocks.size(); ++i) {
    g0 = g0.hconcat(input.blocks[i]);
  }
  if (g0.cols() != n || rank(g0) != n) {
    throw Error(ErrorCode::kNotFullRank,
                "(K_0, c_1, ..., c_(a-1), K_a) is not an invertible n x n matrix");
  }
  return construction_d(input, /*strict=*/false);
}

Lattice simplified_d(const Code& code) {
  return hnf(GeneratingSet(code.length(), [&] {
    std::vector<IntVector> cols;
    for (const auto& c : min_weight_codewords(code)) cols.push_back(embed(c));
    return cols;
  }()));
}

Lattice construction_c_star_definitional(const Code& code) {
  const std::size_t n = code.length();
  if (n == 0 || n > 32) {
    throw Error(ErrorCode::kInvalidArgument,
                "Construction C* is limited to 1 <= n <= 32");
  }
  std::optional<Lattice> meet;
  for (std::size_t i = 1; i <= n; ++i) {
    // 2^(n-i)·bar C + 2^(n-i+1)·Z^n is itself a lattice.
    GeneratingSet gens(n);
    const Integer factor = power_of_two(n - i);
    for (const auto& g : code.generator().columns()) {
      gens.add(scaled_embedding(g, factor));
    }
    add_scaled_unit_vectors(gens, 2 * factor);
    Lattice term = hnf(gens);
    meet = meet ? intersect(*meet, term) : std::move(term);
  }
  GeneratingSet sum(n, meet->basis());
  add_scaled_unit_vectors(sum, power_of_two(n));
  return hnf(sum);
}

Lattice construction_c_star(const Code& code) {
  const std::size_t n = code.length();
  if (n == 0 || n > 32) {
    throw Error(ErrorCode::kInvalidArgument,
                "Construction C* is limited to 1 <= n <= 32");
  }
  Lattice collapsed = scale(construction_a(code), power_of_two(n - 1));
  if (n <= 8 && !lattices_equal(collapsed, construction_c_star_definitional(code))) {
    throw Error(ErrorCode::kInternal,
                "C* definitional route disagrees with 2^(n-1)·L_A");
  }
  return collapsed;
}

std::optional<DBarDecomposition> d_bar_member(const CodeTower& tower,
                                              const IntVector& v) {
  if (v.size() != tower.length()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of length " + std::to_string(v.size()) +
                    " tested against a tower of length " +
                    std::to_string(tower.length()));
  }
  DBarDecomposition out;
  IntVector residual = v;
  for (std::size_t i = tower.depth(); i >= 1; --i) {
    BinaryVector digit = mod2(residual);
    if (!tower.level(i).contains(digit)) return std::nullopt;
    for (std::size_t k : digit.support()) residual[k] -= 1;
    for (auto& x : residual) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 2);
    out.codewords.push_back(std::move(digit));
  }
  out.tail = std::move(residual);
  return out;
}

Lattice d_bar_generated_lattice(const CodeTower& tower) {
  const std::size_t n = tower.length();
  const std::size_t a = tower.depth();
  GeneratingSet gens(n);
  add_scaled_unit_vectors(gens, power_of_two(a));
  for (std::size_t i = 1; i <= a; ++i) {
    const Integer factor = power_of_two(a - i);
    for (const auto& c : codewords(tower.level(i))) {
      if (!c.is_zero()) gens.add(scaled_embedding(c, factor));
    }
  }
  return hnf(gens);
}

DBarLatticeCheck d_bar_is_lattice(const CodeTower& tower,
                                  std::uint64_t max_cosets) {
  const std::size_t n = tower.length();
  const std::size_t a = tower.depth();
  const Integer modulus = power_of_two(a);

  DBarLatticeCheck result;
  result.generated = d_bar_generated_lattice(tower);
  const Lattice& lattice = result.generated;

  // Coset representatives of 2^a Z^n in the generated lattice: Σ x_j b_j with
  // 0 <= x_j < 2^a / pivot_j. The HNF is triangular, so these are distinct,
  // and their number equals the index.
  std::vector<std::uint64_t> radix(lattice.rank());
  Integer count = 1;
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    const Integer r = modulus / lattice.pivot(j);
    count *= r;
    if (count > max_cosets) {
      throw Error(ErrorCode::kQuotientTooLarge,
                  "more than " + std::to_string(max_cosets) + " cosets");
    }
    radix[j] = r.get_ui();
  }
  result.cosets = count.get_ui();

  std::vector<std::uint64_t> digits(lattice.rank(), 0);
  std::vector<IntVector> failures;
  for (std::uint64_t step = 0; step < result.cosets; ++step) {
    IntVector v(n, 0);
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (digits[j] == 0) continue;
      for (std::size_t k = lattice.pivot_row(j); k < n; ++k) {
        v[k] += lattice.basis()[j][k] * static_cast<unsigned long>(digits[j]);
      }
    }
    for (auto& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    if (!d_bar_member(tower, v)) failures.push_back(std::move(v));

    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (++digits[j] < radix[j]) break;
      digits[j] = 0;
    }
  }

  result.is_lattice = failures.empty();
  if (result.is_lattice) return result;

  for (std::size_t i = a; i >= 1 && !result.summands; --i) {
    const Integer factor = power_of_two(a - i);
    const auto& cols = tower.level(i).generator().columns();
    for (std::size_t j = 0; j < cols.size() && !result.summands; ++j) {
      for (std::size_t l = j; l < cols.size(); ++l) {
        IntVector u = scaled_embedding(cols[j], factor);
        IntVector w = scaled_embedding(cols[l], factor);
        IntVector sum(n);
        for (std::size_t k = 0; k < n; ++k) sum[k] = u[k] + w[k];
        if (!d_bar_member(tower, sum)) {
          result.witness = std::move(sum);
          result.summands.emplace(std::move(u), std::move(w));
          break;
        }
      }
    }
  }
  if (!result.witness) {
    sort_canonical(failures);
    result.witness = std::move(failures.front());
  }
  return result;
}

}  // namespace codelattice
