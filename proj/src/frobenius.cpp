#include "hibi/frobenius.hpp"

#include <numeric>
#include <string>

#include "hibi/errors.hpp"

namespace hibi {

namespace {

bool divisible_by_power(const Poset& p, const HibiMonomial& m, const PosetIdeal& ideal, long q) {
  HibiMonomial quotient = m;
  quotient.t_degree -= q;
  if (quotient.t_degree < 0) return false;
  for (ElementId x : ideal.members()) quotient.exponents[x] -= q;
  return in_semigroup(p, quotient);
}

bool in_power(const Poset& p, const HibiMonomial& m, const std::vector<PosetIdeal>& ideals, long q) {
  for (const PosetIdeal& ideal : ideals)
    if (divisible_by_power(p, m, ideal, q)) return true;
  return false;
}

}  // namespace

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

bool in_frobenius_power(const Poset& p, const HibiMonomial& m, long q, const Caps& caps) {
  if (q < 2) throw BadParameters("Frobenius exponent must be at least 2");
  if (m.exponents.size() != p.size()) throw DomainError("monomial does not match the poset");
  return in_power(p, m, enumerate_ideals(p, caps), q);
}

FrobeniusReport frobenius_nu(const Poset& p, long q, const Caps& caps) {
  if (q < 2) throw BadParameters("Frobenius exponent must be at least 2");
  if (p.size() > caps.oracle_max_elements)
    throw OracleCapExceeded("oracle accepts up to " + std::to_string(caps.oracle_max_elements) +
                            " elements, poset has " + std::to_string(p.size()) +
                            "; nothing searched");
  if (q > caps.oracle_max_q)
    throw OracleCapExceeded("oracle accepts q up to " + std::to_string(caps.oracle_max_q) +
                            ", got " + std::to_string(q) + "; nothing searched");

  const std::vector<PosetIdeal> ideals = enumerate_ideals(p, caps);
  const int rank_star = upper_rank(p, caps);

  FrobeniusReport report;
  report.q = q;
  report.predicted = static_cast<long>(rank_star + 2) * (q - 1);

  // m^r is generated by its t-degree-r monomials and the witness degrees are
  // downward closed, so the first degree with a non-member is ν(q). The +2
  // headroom turns a formula violation into a visible mismatch instead of a
  // silent truncation.
  const long bound = report.predicted + 2;
  for (long r = bound; r >= 0; --r) {
    for (const HibiMonomial& m : semigroup_monomials(p, r)) {
      if (!in_power(p, m, ideals, q)) {
        report.nu = r;
        report.witness = m;
        report.matches = report.nu == report.predicted;
        return report;
      }
    }
  }
  throw InternalDisagreement("no monomial outside m^[q] found at any degree, including T^0");
}

HibiMonomial witness_monomial(const Poset& p, const StarPath& c, long q) {
  if (q < 2) throw BadParameters("Frobenius exponent must be at least 2");
  if (!satisfies_star(p, c)) throw StarViolation("witness path must satisfy condition (*)");

  std::vector<ElementId> ascending;
  for (const auto& piece : decompose(c).pieces)
    if (piece.ascending) ascending.insert(ascending.end(), piece.vertices.begin(), piece.vertices.end());

  // Increasing ideal tower over the ascending-run vertices; the product of
  // the (q-1)-th generator powers over it (and the empty ideal) stays
  // outside m^[q].
  std::vector<PosetIdeal> tower;
  for (ElementId v : ascending) {
    if (tower.empty())
      tower.push_back(PosetIdeal::from_members(p, {v}));
    else
      tower.push_back(PosetIdeal::set_union(PosetIdeal::principal(p, v), tower.back()));
  }

  HibiMonomial m;
  m.t_degree = static_cast<std::int64_t>(tower.size() + 1) * (q - 1);
  m.exponents.assign(p.size(), 0);
  for (const PosetIdeal& ideal : tower)
    for (ElementId x : ideal.members()) m.exponents[x] += q - 1;
  return m;
}

CDiagonalEstimate c_diagonal_estimate(const Poset& p, const std::vector<long>& qs, const Caps& caps) {
  CDiagonalEstimate est;
  est.predicted_limit = upper_rank(p, caps) + 2;
  for (long q : qs) {
    est.reports.push_back(frobenius_nu(p, q, caps));
    est.ratios.push_back(Rational::of(est.reports.back().nu, q - 1));
  }
  return est;
}

}  // namespace hibi
