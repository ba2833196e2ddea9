#include <cmath>
#include <map>

#include "codelattice/error.hpp"
#include "codelattice/zlattice.hpp"

namespace codelattice {

LpPower::LpPower(const IntVector& v, const Rational& p) : p_(p) {
  p_.canonicalize();
  if (p_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "lp_norm requires p >= 1");
  }
  if (!p_.get_num().fits_ulong_p() || !p_.get_den().fits_ulong_p()) {
    throw Error(ErrorCode::kInvalidArgument, "exponent p is too large");
  }
  std::map<Integer, std::size_t> counts;
  for (const auto& x : v) {
    if (sgn(x) != 0) ++counts[abs(x)];
  }
  terms_.assign(counts.begin(), counts.end());
}

std::optional<Integer> LpPower::exact() const {
  if (p_.get_den() != 1) return std::nullopt;
  const unsigned long e = p_.get_num().get_ui();
  Integer total = 0;
  for (const auto& [magnitude, count] : terms_) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), magnitude.get_mpz_t(), e);
    total += power * static_cast<unsigned long>(count);
  }
  return total;
}

double LpPower::approx() const {
  const double p = p_.get_d();
  double total = 0;
  for (const auto& [magnitude, count] : terms_) {
    total += static_cast<double>(count) * std::pow(magnitude.get_d(), p);
  }
  return total;
}

std::strong_ordering LpPower::compare(const Integer& bound) const {
  if (auto value = exact()) return cmp(*value, bound) <=> 0;

  // Bracket each t^(a/b) between floor and ceil of 2^s · t^(a/b), obtained as
  // an integer b-th root of t^a · 2^(s·b); refine s until the bracket clears
  // the bound. An irrational sum never equals an integer, so this ends.
  const unsigned long a = p_.get_num().get_ui();
  const unsigned long b = p_.get_den().get_ui();
  for (unsigned long bits = 32; bits <= (1UL << 16); bits *= 2) {
    Integer lower = 0;
    Integer upper = 0;
    for (const auto& [magnitude, count] : terms_) {
      Integer radicand;
      mpz_pow_ui(radicand.get_mpz_t(), magnitude.get_mpz_t(), a);
      radicand <<= bits * b;
      Integer root;
      const bool exact_root =
          mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), b) != 0;
      lower += root * static_cast<unsigned long>(count);
      upper += (exact_root ? root : Integer(root + 1)) *
               static_cast<unsigned long>(count);
    }
    const Integer scaled_bound = bound << bits;
    if (upper < scaled_bound) return std::strong_ordering::less;
    if (lower > scaled_bound) return std::strong_ordering::greater;
    if (lower == upper && lower == scaled_bound) return std::strong_ordering::equal;
  }
  throw Error(ErrorCode::kInternal, "lp power comparison did not separate");
}

LpPower lp_norm(const IntVector& v, const Rational& p) { return LpPower(v, p); }

}  // namespace codelattice
