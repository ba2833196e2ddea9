#include <algorithm>
#include <limits>

#include "codelattice/error.hpp"
#include "codelattice/zlattice.hpp"

namespace codelattice {
namespace {

void require_dimension(std::size_t expected, std::size_t actual,
                       const char* what) {
  if (expected != actual) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": expected dimension " +
                    std::to_string(expected) + ", got " +
                    std::to_string(actual));
  }
}

bool fits_int64(const Integer& x) { return x.fits_slong_p() != 0; }

// Forward substitution: inverse of a lower-triangular, invertible matrix
// given by columns.
std::vector<std::vector<Rational>> lower_triangular_inverse(
    const std::vector<IntVector>& columns) {
  const std::size_t n = columns.size();
  // inv[r][c]; solve L X = I column by column.
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c; r < n; ++r) {
      Rational acc = (r == c) ? 1 : 0;
      for (std::size_t k = c; k < r; ++k) {
        acc -= Rational(columns[k][r]) * inv[k][c];
      }
      inv[r][c] = acc / Rational(columns[r][r]);
    }
  }
  return inv;
}

// D · M^{-T} for a full-rank HNF basis; asserts integrality.
std::vector<IntVector> scaled_dual(const Lattice& lattice,
                                   const Integer& scale) {
  const std::size_t n = lattice.dimension();
  const auto inv = lower_triangular_inverse(lattice.basis());
  // Columns of M^{-T} are the rows of M^{-1}.
  std::vector<IntVector> out(n, IntVector(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      Rational value = inv[c][r] * Rational(scale);
      if (value.get_den() != 1) {
        throw Error(ErrorCode::kInternal, "dual scaling is not integral");
      }
      out[c][r] = value.get_num();
    }
  }
  return out;
}

}  // namespace

IntVector make_int_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Integer squared_norm(const IntVector& v) {
  Integer total = 0;
  for (const auto& x : v) total += x * x;
  return total;
}

bool canonical_less(const IntVector& a, const IntVector& b) {
  const Integer na = squared_norm(a);
  const Integer nb = squared_norm(b);
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_canonical(std::vector<IntVector>& vectors) {
  std::vector<std::pair<Integer, IntVector>> keyed;
  keyed.reserve(vectors.size());
  for (auto& v : vectors) {
    Integer n = squared_norm(v);
    keyed.emplace_back(std::move(n), std::move(v));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    vectors[i] = std::move(keyed[i].second);
  }
}

GeneratingSet::GeneratingSet(std::size_t n, std::vector<IntVector> cols)
    : dimension(n) {
  for (auto& c : cols) add(std::move(c));
}

void GeneratingSet::add(IntVector column) {
  require_dimension(dimension, column.size(), "generating set column");
  columns.push_back(std::move(column));
}

Lattice::Lattice(std::size_t dimension) : dimension_(dimension) {}

void Lattice::finalize() {
  const std::size_t r = basis_.size();
  gram_.assign(r, std::vector<Integer>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Integer dot = 0;
      // Both columns vanish above the later pivot.
      for (std::size_t k = pivot_rows_[i]; k < dimension_; ++k) {
        dot += basis_[i][k] * basis_[j][k];
      }
      gram_[i][j] = dot;
      gram_[j][i] = dot;
    }
  }
  small_basis_.clear();
  bool small = true;
  for (const auto& col : basis_) {
    for (const auto& x : col) {
      // Leave headroom so a single product check cannot wrap.
      if (!fits_int64(x) || abs(x) > Integer(1) << 40) small = false;
    }
  }
  if (small) {
    small_basis_.reserve(r);
    for (const auto& col : basis_) {
      std::vector<std::int64_t> c(col.size());
      for (std::size_t k = 0; k < col.size(); ++k) c[k] = col[k].get_si();
      small_basis_.push_back(std::move(c));
    }
  }
}

Lattice hnf(const GeneratingSet& generators) {
  const std::size_t n = generators.dimension;
  Lattice out(n);
  // Columns by pivot row; -1 marks a row without pivot.
  std::vector<IntVector> cols;
  std::vector<std::ptrdiff_t> col_at_row(n, -1);
  Integer g, s, t, a_over_g, b_over_g;

  auto reduce_all = [&]() {
    // Rebuild pivot order, normalize signs, then reduce each pivot row.
    std::vector<std::size_t> order;
    for (std::size_t row = 0; row < n; ++row) {
      if (col_at_row[row] >= 0) order.push_back(row);
    }
    for (std::size_t row : order) {
      auto& c = cols[static_cast<std::size_t>(col_at_row[row])];
      if (sgn(c[row]) < 0) {
        for (auto& x : c) x = -x;
      }
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t prow = order[k];
      const auto& pc = cols[static_cast<std::size_t>(col_at_row[prow])];
      for (std::size_t j = 0; j < k; ++j) {
        auto& c = cols[static_cast<std::size_t>(col_at_row[order[j]])];
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), c[prow].get_mpz_t(), pc[prow].get_mpz_t());
        if (q != 0) {
          for (std::size_t row = prow; row < n; ++row) c[row] -= q * pc[row];
        }
      }
    }
  };

  for (const auto& generator : generators.columns) {
    IntVector v = generator;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      if (col_at_row[i] < 0) {
        col_at_row[i] = static_cast<std::ptrdiff_t>(cols.size());
        cols.push_back(std::move(v));
        break;
      }
      auto& h = cols[static_cast<std::size_t>(col_at_row[i])];
      if (mpz_divisible_p(v[i].get_mpz_t(), h[i].get_mpz_t())) {
        const Integer q = v[i] / h[i];
        for (std::size_t row = i; row < n; ++row) v[row] -= q * h[row];
        continue;
      }
      // Unimodular 2x2 step [[s, t], [-b/g, a/g]] zeroes v at row i.
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 h[i].get_mpz_t(), v[i].get_mpz_t());
      a_over_g = h[i] / g;
      b_over_g = v[i] / g;
      for (std::size_t row = i; row < n; ++row) {
        Integer new_h = s * h[row] + t * v[row];
        v[row] = a_over_g * v[row] - b_over_g * h[row];
        h[row] = std::move(new_h);
      }
    }
    reduce_all();
  }

  for (std::size_t row = 0; row < n; ++row) {
    if (col_at_row[row] >= 0) {
      out.pivot_rows_.push_back(row);
      out.basis_.push_back(std::move(cols[static_cast<std::size_t>(col_at_row[row])]));
    }
  }
  out.finalize();
  return out;
}

Lattice lattice_from_columns(std::size_t dimension,
                             std::vector<IntVector> columns) {
  return hnf(GeneratingSet(dimension, std::move(columns)));
}

Lattice integer_lattice(std::size_t n) {
  GeneratingSet gens(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    gens.add(std::move(e));
  }
  return hnf(gens);
}

std::optional<std::optional<IntVector>> Lattice::coordinates_small(
    const IntVector& v) const {
  std::vector<std::int64_t> residual(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (!fits_int64(v[i])) return std::nullopt;
    residual[i] = v[i].get_si();
  }
  std::vector<std::int64_t> coeffs(basis_.size(), 0);
  std::size_t next = 0;
  for (std::size_t row = 0; row < dimension_; ++row) {
    if (next < pivot_rows_.size() && pivot_rows_[next] == row) {
      const auto& col = small_basis_[next];
      const std::int64_t p = col[row];
      if (residual[row] % p != 0) return std::optional<IntVector>{};
      const std::int64_t q = residual[row] / p;
      coeffs[next] = q;
      if (q != 0) {
        for (std::size_t k = row; k < dimension_; ++k) {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(q, col[k], &prod) ||
              __builtin_sub_overflow(residual[k], prod, &residual[k])) {
            return std::nullopt;
          }
        }
      }
      ++next;
    } else if (residual[row] != 0) {
      return std::optional<IntVector>{};
    }
  }
  IntVector out;
  out.reserve(coeffs.size());
  for (auto c : coeffs) out.emplace_back(static_cast<long>(c));
  return std::optional<IntVector>{std::move(out)};
}

std::optional<IntVector> coordinates(const Lattice& lattice, const IntVector& v) {
  require_dimension(lattice.dimension(), v.size(), "membership test");
  if (!lattice.small_basis_.empty() || lattice.rank() == 0) {
    if (auto fast = lattice.coordinates_small(v)) return *fast;
  }
  IntVector residual = v;
  IntVector coeffs(lattice.rank(), 0);
  std::size_t next = 0;
  for (std::size_t row = 0; row < lattice.dimension(); ++row) {
    if (next < lattice.rank() && lattice.pivot_rows_[next] == row) {
      const auto& col = lattice.basis_[next];
      if (!mpz_divisible_p(residual[row].get_mpz_t(), col[row].get_mpz_t())) {
        return std::nullopt;
      }
      const Integer q = residual[row] / col[row];
      for (std::size_t k = row; k < lattice.dimension(); ++k) {
        residual[k] -= q * col[k];
      }
      coeffs[next++] = q;
    } else if (residual[row] != 0) {
      return std::nullopt;
    }
  }
  return coeffs;
}

bool contains(const Lattice& lattice, const IntVector& v) {
  return coordinates(lattice, v).has_value();
}

Determinant determinant(const Lattice& lattice) {
  if (lattice.rank() == 0) {
    throw Error(ErrorCode::kZeroRank, "determinant of the zero lattice");
  }
  if (lattice.is_full_rank()) {
    Integer product = 1;
    for (std::size_t j = 0; j < lattice.rank(); ++j) product *= lattice.pivot(j);
    return {product, false};
  }
  // Bareiss fraction-free elimination on the Gram matrix.
  auto m = lattice.gram();
  const std::size_t r = m.size();
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < r; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  const Integer gram_det = m[r - 1][r - 1];
  if (mpz_perfect_square_p(gram_det.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), gram_det.get_mpz_t());
    return {root, false};
  }
  return {gram_det, true};
}

bool lattices_equal(const Lattice& a, const Lattice& b) {
  require_dimension(a.dimension(), b.dimension(), "lattice comparison");
  return a == b;
}

Lattice scale(const Lattice& lattice, const Integer& factor) {
  if (factor <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  }
  GeneratingSet gens(lattice.dimension());
  for (const auto& col : lattice.basis()) {
    IntVector scaled = col;
    for (auto& x : scaled) x *= factor;
    gens.add(std::move(scaled));
  }
  return hnf(gens);
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  require_dimension(a.dimension(), b.dimension(), "lattice intersection");
  if (!a.is_full_rank() || !b.is_full_rank()) {
    throw Error(ErrorCode::kInvalidArgument,
                "intersection is implemented for full-rank lattices");
  }
  const std::size_t n = a.dimension();
  Integer d;
  const Integer da = determinant(a).value;
  const Integer db = determinant(b).value;
  mpz_lcm(d.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  // (A ∩ B)* = A* + B*, with duals scaled by d to stay integral.
  GeneratingSet dual_sum(n);
  for (auto& col : scaled_dual(a, d)) dual_sum.add(std::move(col));
  for (auto& col : scaled_dual(b, d)) dual_sum.add(std::move(col));
  const Lattice h = hnf(dual_sum);
  return hnf(GeneratingSet(n, scaled_dual(h, d)));
}

}  // namespace codelattice
