#include "codelattice/error.hpp"
#include "codelattice/zlattice.hpp"

namespace codelattice {
namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) total += a[i] * b[i];
  }
  return total;
}

// Integral Gram–Schmidt data (1-indexed): d[k] = det of the leading k×k Gram
// block, lambda[k][j] = d[j]·mu[k][j]. Both are integers.
struct IntegralGramSchmidt {
  std::vector<Integer> d;
  std::vector<std::vector<Integer>> lambda;

  explicit IntegralGramSchmidt(std::size_t r)
      : d(r + 1, 0), lambda(r + 1, std::vector<Integer>(r + 1, 0)) {
    d[0] = 1;
  }

  // Fills row k from dot products; requires rows 1..k-1 to be current.
  void extend(const std::vector<IntVector>& b, std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      Integer u = dot(b[k], b[j]);
      for (std::size_t i = 1; i < j; ++i) {
        u = (d[i] * u - lambda[k][i] * lambda[j][i]) / d[i - 1];
      }
      if (j < k) {
        lambda[k][j] = std::move(u);
      } else {
        if (u == 0) {
          throw Error(ErrorCode::kInvalidArgument,
                      "basis vectors are linearly dependent");
        }
        d[k] = std::move(u);
      }
    }
  }
};

}  // namespace

Rational default_lll_delta() { return Rational(99, 100); }

GramSchmidt gram_schmidt(const std::vector<IntVector>& basis) {
  const std::size_t r = basis.size();
  std::vector<IntVector> b(r + 1);
  for (std::size_t i = 0; i < r; ++i) b[i + 1] = basis[i];
  IntegralGramSchmidt igs(r);
  for (std::size_t k = 1; k <= r; ++k) igs.extend(b, k);

  GramSchmidt out;
  out.sqnorms.resize(r);
  out.mu.assign(r, std::vector<Rational>(r, 0));
  for (std::size_t k = 1; k <= r; ++k) {
    out.sqnorms[k - 1] = Rational(igs.d[k], igs.d[k - 1]);
    out.sqnorms[k - 1].canonicalize();
    out.mu[k - 1][k - 1] = 1;
    for (std::size_t j = 1; j < k; ++j) {
      out.mu[k - 1][j - 1] = Rational(igs.lambda[k][j], igs.d[j]);
      out.mu[k - 1][j - 1].canonicalize();
    }
  }
  return out;
}

std::vector<IntVector> lll_reduce_basis(std::vector<IntVector> basis,
                                        const Rational& delta) {
  if (delta <= Rational(1, 4) || delta >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "LLL delta must lie in (1/4, 1)");
  }
  const std::size_t r = basis.size();
  if (r <= 1) return basis;
  const Integer& dp = delta.get_num();
  const Integer& dq = delta.get_den();

  std::vector<IntVector> b(r + 1);
  for (std::size_t i = 0; i < r; ++i) b[i + 1] = std::move(basis[i]);
  IntegralGramSchmidt gs(r);
  auto& d = gs.d;
  auto& lam = gs.lambda;
  gs.extend(b, 1);

  // Size-reduce b_k against b_l.
  auto redi = [&](std::size_t k, std::size_t l) {
    Integer twice = 2 * lam[k][l];
    if (abs(twice) <= d[l]) return;
    Integer q;
    Integer numerator = twice + d[l];
    Integer denominator = 2 * d[l];
    mpz_fdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t kmax = 1;
  auto swapi = [&](std::size_t k) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    const Integer bnew = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (bnew * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = bnew;
  };

  std::size_t k = 2;
  while (k <= r) {
    if (k > kmax) {
      kmax = k;
      gs.extend(b, k);
    }
    redi(k, k - 1);
    const Integer lhs = dq * d[k] * d[k - 2];
    const Integer rhs = dp * d[k - 1] * d[k - 1] - dq * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swapi(k);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) redi(k, l);
      ++k;
    }
  }

  std::vector<IntVector> out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = std::move(b[i + 1]);
  return out;
}

std::vector<IntVector> lll_reduce(const Lattice& lattice, const Rational& delta) {
  return lll_reduce_basis(lattice.basis(), delta);
}

}  // namespace codelattice
