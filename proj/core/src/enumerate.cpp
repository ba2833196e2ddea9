// Fincke–Pohst enumeration with exact rational Gram–Schmidt data.
//
// A coefficient vector x contributes Σ_i B_i (x_i − c_i)² to the squared norm,
// where c_i = −Σ_{j>i} mu[j][i] x_j. Levels are visited from the last basis
// vector down; at each level the admissible x_i are walked outward from the
// nearest integer to c_i, and every bound test is a rational comparison.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "codelattice/error.hpp"
#include "codelattice/zlattice.hpp"

namespace codelattice {
namespace {

class Enumerator {
 public:
  Enumerator(const std::vector<IntVector>& basis, const GramSchmidt& gs,
             std::size_t dimension, Rational radius, bool shortest,
             std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
      : basis_(basis),
        gs_(gs),
        dimension_(dimension),
        radius_(std::move(radius)),
        shortest_(shortest),
        budget_(budget),
        nodes_(nodes),
        x_(basis.size(), 0) {}

  // Enumerates the subtrees whose last coefficient is one of `top`.
  void run(const std::vector<Integer>& top) {
    const std::size_t last = basis_.size() - 1;
    for (const auto& value : top) {
      const Rational diff = Rational(value);
      const Rational partial = diff * diff * gs_.sqnorms[last];
      if (partial > radius_) continue;
      count_node();
      x_[last] = value;
      if (last == 0) {
        leaf();
      } else {
        search(last - 1, partial);
      }
    }
  }

  const Rational& radius() const { return radius_; }
  std::vector<IntVector>& found() { return found_; }

 private:
  void count_node() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw Error(ErrorCode::kEnumerationBudgetExceeded,
                  "node budget of " + std::to_string(budget_) + " exhausted");
    }
  }

  void search(std::size_t i, const Rational& partial) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (sgn(x_[j]) != 0) center -= gs_.mu[j][i] * x_[j];
    }
    Integer nearest;
    {
      Rational shifted = center + Rational(1, 2);
      mpz_fdiv_q(nearest.get_mpz_t(), shifted.get_num_mpz_t(),
                 shifted.get_den_mpz_t());
    }
    for (int direction : {+1, -1}) {
      Integer x = direction > 0 ? nearest : Integer(nearest - 1);
      while (true) {
        const Rational diff = Rational(x) - center;
        Rational next = partial + diff * diff * gs_.sqnorms[i];
        // |x − c| only grows as x moves away from the nearest integer.
        if (next > radius_) break;
        count_node();
        x_[i] = x;
        if (i == 0) {
          leaf();
        } else {
          search(i - 1, next);
        }
        if (direction > 0) {
          ++x;
        } else {
          --x;
        }
      }
    }
    x_[i] = 0;
  }

  void leaf() {
    IntVector v(dimension_, 0);
    bool zero = true;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (sgn(x_[j]) == 0) continue;
      zero = false;
      for (std::size_t k = 0; k < dimension_; ++k) {
        if (sgn(basis_[j][k]) != 0) v[k] += x_[j] * basis_[j][k];
      }
    }
    if (shortest_) {
      if (zero) return;
      const Rational norm = Rational(squared_norm(v));
      if (norm < radius_) {
        radius_ = norm;
        found_.clear();
      }
      if (norm == radius_) found_.push_back(std::move(v));
      return;
    }
    found_.push_back(std::move(v));
  }

  const std::vector<IntVector>& basis_;
  const GramSchmidt& gs_;
  std::size_t dimension_;
  Rational radius_;
  bool shortest_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<Integer> x_;
  std::vector<IntVector> found_;
};

struct EnumerationResult {
  std::vector<IntVector> vectors;
  Rational radius;
  std::uint64_t nodes = 0;
};

EnumerationResult enumerate(const std::vector<IntVector>& basis,
                            std::size_t dimension, const Rational& radius,
                            bool shortest, const EnumerationOptions& options) {
  const GramSchmidt gs = gram_schmidt(basis);
  const std::size_t last = basis.size() - 1;

  // Admissible values of the last coefficient: |x| ≤ sqrt(radius / B_last).
  std::vector<Integer> top;
  {
    Integer x = 0;
    while (Rational(x * x) * gs.sqnorms[last] <= radius) {
      top.push_back(x);
      if (x != 0) top.push_back(-x);
      ++x;
    }
  }

  const unsigned workers = std::max(1U, std::min<unsigned>(
                                            options.workers,
                                            static_cast<unsigned>(top.size())));
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<Integer>> shares(workers);
  for (std::size_t i = 0; i < top.size(); ++i) shares[i % workers].push_back(top[i]);

  std::vector<Enumerator> parts;
  parts.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    parts.emplace_back(basis, gs, dimension, radius, shortest,
                       options.node_budget, nodes);
  }
  if (workers == 1) {
    parts[0].run(shares[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          parts[w].run(shares[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  EnumerationResult result;
  result.nodes = nodes.load();
  result.radius = radius;
  if (shortest) {
    for (auto& p : parts) {
      if (!p.found().empty() && p.radius() < result.radius) {
        result.radius = p.radius();
      }
    }
    for (auto& p : parts) {
      if (p.found().empty() || p.radius() != result.radius) continue;
      for (auto& v : p.found()) result.vectors.push_back(std::move(v));
    }
  } else {
    for (auto& p : parts) {
      for (auto& v : p.found()) result.vectors.push_back(std::move(v));
    }
  }
  sort_canonical(result.vectors);
  return result;
}

}  // namespace

ShortVectorReport shortest_vectors(const Lattice& lattice,
                                   const EnumerationOptions& options) {
  if (lattice.rank() == 0) {
    throw Error(ErrorCode::kZeroRank, "shortest vectors of the zero lattice");
  }
  const auto reduced = lll_reduce(lattice, options.delta);
  Integer initial = squared_norm(reduced.front());
  for (const auto& b : reduced) initial = std::min(initial, squared_norm(b));

  auto result = enumerate(reduced, lattice.dimension(), Rational(initial),
                          /*shortest=*/true, options);
  if (result.vectors.empty()) {
    throw Error(ErrorCode::kInternal, "enumeration lost the basis vectors");
  }
  ShortVectorReport report;
  report.lambda1_sq = squared_norm(result.vectors.front());
  report.kissing = result.vectors.size();
  report.vectors = std::move(result.vectors);
  report.nodes = result.nodes;
  return report;
}

std::vector<IntVector> vectors_up_to(const Lattice& lattice,
                                     const Integer& bound,
                                     const EnumerationOptions& options) {
  if (bound < 0) {
    throw Error(ErrorCode::kInvalidArgument, "radius bound must be nonnegative");
  }
  if (lattice.rank() == 0) return {IntVector(lattice.dimension(), 0)};
  const auto reduced = lll_reduce(lattice, options.delta);
  return enumerate(reduced, lattice.dimension(), Rational(bound),
                   /*shortest=*/false, options)
      .vectors;
}

}  // namespace codelattice
