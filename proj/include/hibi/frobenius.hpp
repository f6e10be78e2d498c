#pragma once

#include <cstdint>
#include <vector>

#include "hibi/config.hpp"
#include "hibi/ideals.hpp"
#include "hibi/paths.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Exact reduced fraction; everything the oracle reports is rational.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  friend bool operator==(const Rational& a, const Rational& b) = default;
};

/// Result of one brute-force ν(q) computation. The witness is a monomial of
/// t-degree ν(q) outside m^[q]; no monomial of larger t-degree up to the
/// search bound lies outside.
struct FrobeniusReport {
  long q = 0;
  long nu = 0;
  HibiMonomial witness;
  long predicted = 0;  // (rank* + 2)(q - 1)
  bool matches = false;
};

/// Membership in the Frobenius power: some phi(I)^q divides the monomial
/// inside the semigroup ring. Throws BadParameters for q < 2 and
/// SizeCapExceeded from the ideal enumeration.
bool in_frobenius_power(const Poset& p, const HibiMonomial& m, long q,
                        const Caps& caps = default_caps());

/// Exhaustive ν(q) = max{r : m^r not contained in m^[q]}, searched from the
/// predicted value plus headroom downward. Throws OracleCapExceeded when the
/// poset or q is beyond the oracle caps.
FrobeniusReport frobenius_nu(const Poset& p, long q, const Caps& caps = default_caps());

/// The explicit tower monomial prod phi(I_i)^{q-1} over the increasing ideal
/// chain built from the ascending-run vertices of a (*)-path. For a path
/// with len* = rank* this realizes the lower bound ν(q) >= (rank*+2)(q-1).
/// Throws StarViolation if the path fails condition (*).
HibiMonomial witness_monomial(const Poset& p, const StarPath& c, long q);

struct CDiagonalEstimate {
  std::vector<FrobeniusReport> reports;
  std::vector<Rational> ratios;  // ν(q)/(q-1), exact
  long predicted_limit = 0;      // rank* + 2
};

/// ν(q)/(q-1) for each requested q next to the limit value rank* + 2.
CDiagonalEstimate c_diagonal_estimate(const Poset& p, const std::vector<long>& qs,
                                      const Caps& caps = default_caps());

}  // namespace hibi
