#pragma once

#include <cstdint>
#include <vector>

#include "hibi/config.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// A down-closed subset of a poset, stored as ascending element ids.
class PosetIdeal {
 public:
  PosetIdeal() = default;

  /// Validates down-closure; throws NotDownClosed.
  static PosetIdeal from_members(const Poset& p, std::vector<ElementId> members);
  /// <p> = {q : q <= p}.
  static PosetIdeal principal(const Poset& p, ElementId top);

  bool contains(ElementId x) const;
  const std::vector<ElementId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }

  static PosetIdeal set_union(const PosetIdeal& a, const PosetIdeal& b);
  static PosetIdeal set_intersection(const PosetIdeal& a, const PosetIdeal& b);

  friend bool operator==(const PosetIdeal& a, const PosetIdeal& b) = default;
  friend bool operator<(const PosetIdeal& a, const PosetIdeal& b) {
    if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

 private:
  std::vector<ElementId> members_;
};

/// Monomial T^r · prod X_p^{s(p)} over the Hibi semigroup. The exponent data
/// may be arbitrary integers; validity is queried through in_semigroup.
struct HibiMonomial {
  std::int64_t t_degree = 0;
  std::vector<std::int64_t> exponents;  // indexed by ElementId

  friend bool operator==(const HibiMonomial& a, const HibiMonomial& b) = default;
};

/// All of J(P), sorted by size and then lexicographically on the member
/// lists; the result ordered by inclusion is the distributive lattice of P.
/// Throws SizeCapExceeded past the element cap.
std::vector<PosetIdeal> enumerate_ideals(const Poset& p, const Caps& caps = default_caps());

/// The generator T · prod_{p in I} X_p. Throws NotDownClosed.
HibiMonomial phi(const Poset& p, const PosetIdeal& ideal);

/// phi over all of J(P) in canonical order.
std::vector<HibiMonomial> generators(const Poset& p, const Caps& caps = default_caps());

/// Lattice-point membership in the Hibi cone: 0 <= s(p) <= r together with
/// s(x) >= s(y) along every cover x ⋖ y.
bool in_semigroup(const Poset& p, const HibiMonomial& m);

/// dim R = #P + 1.
std::size_t dimension(const Poset& p);

/// Primitive ray data of the dual cone: one vector (u_T; u_p) per ideal,
/// with u_T = 1 and u_p the indicator of membership.
std::vector<std::vector<int>> cone_generators(const Poset& p, const Caps& caps = default_caps());

HibiMonomial monomial_mul(const HibiMonomial& a, const HibiMonomial& b);

/// Splits a semigroup monomial of t-degree d into the d generator ideals
/// given by its exponent level sets {p : s(p) >= k}; inverse of multiplying
/// d generators. Throws DomainError if the monomial is not in the semigroup.
std::vector<PosetIdeal> factor_into_generators(const Poset& p, const HibiMonomial& m);

/// Every valid exponent vector of the given t-degree, in colexicographic
/// order (first coordinate varies fastest).
std::vector<HibiMonomial> semigroup_monomials(const Poset& p, std::int64_t t_degree);

}  // namespace hibi
