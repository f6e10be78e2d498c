#include "hibi/ideals.hpp"

#include <algorithm>
#include <string>

#include "hibi/errors.hpp"

namespace hibi {

namespace {

// Down-closure holds iff the set is closed under covers-below.
bool down_closed(const Poset& p, const std::vector<ElementId>& sorted_members) {
  for (ElementId m : sorted_members)
    for (ElementId q : p.covers_below(m))
      if (!std::binary_search(sorted_members.begin(), sorted_members.end(), q)) return false;
  return true;
}

}  // namespace

PosetIdeal PosetIdeal::from_members(const Poset& p, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (ElementId m : members)
    if (m >= p.size()) throw UnknownElement("ideal member id out of range");
  if (!down_closed(p, members)) throw NotDownClosed("subset is not down-closed");
  PosetIdeal ideal;
  ideal.members_ = std::move(members);
  return ideal;
}

PosetIdeal PosetIdeal::principal(const Poset& p, ElementId top) {
  if (top >= p.size()) throw UnknownElement("ideal generator id out of range");
  PosetIdeal ideal;
  ideal.members_ = p.down_set(top);
  return ideal;
}

bool PosetIdeal::contains(ElementId x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

PosetIdeal PosetIdeal::set_union(const PosetIdeal& a, const PosetIdeal& b) {
  PosetIdeal out;
  std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

PosetIdeal PosetIdeal::set_intersection(const PosetIdeal& a, const PosetIdeal& b) {
  PosetIdeal out;
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

std::vector<PosetIdeal> enumerate_ideals(const Poset& p, const Caps& caps) {
  const std::size_t n = p.size();
  if (n > caps.max_elements)
    throw SizeCapExceeded("poset has " + std::to_string(n) + " elements, ideal enumeration cap is " +
                          std::to_string(caps.max_elements));
  if (n > 63)
    throw SizeCapExceeded("ideal enumeration is limited to 63 elements");

  std::vector<std::uint64_t> below_mask(n, 0);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y : p.down_set(x)) below_mask[x] |= std::uint64_t{1} << y;

  const std::vector<ElementId> order = p.linear_extension();

  // Walk a linear extension deciding membership element by element; taking
  // an element requires everything below it to be in already. Each ideal is
  // reached exactly once and no branch dies, so the walk is output-linear.
  std::vector<std::uint64_t> masks;
  std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, mask] = stack.back();
    stack.pop_back();
    if (k == n) {
      masks.push_back(mask);
      continue;
    }
    ElementId e = order[k];
    const std::uint64_t bit = std::uint64_t{1} << e;
    if ((below_mask[e] & ~(mask | bit)) == 0) stack.emplace_back(k + 1, mask | bit);
    stack.emplace_back(k + 1, mask);
  }

  std::vector<PosetIdeal> ideals;
  ideals.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    std::vector<ElementId> members;
    for (ElementId x = 0; x < n; ++x)
      if (mask & (std::uint64_t{1} << x)) members.push_back(x);
    PosetIdeal ideal;
    // members already sorted and down-closed by construction
    ideal = PosetIdeal::from_members(p, std::move(members));
    ideals.push_back(std::move(ideal));
  }
  std::sort(ideals.begin(), ideals.end());
  return ideals;
}

HibiMonomial phi(const Poset& p, const PosetIdeal& ideal) {
  if (!ideal.members().empty() && ideal.members().back() >= p.size())
    throw UnknownElement("ideal does not fit the poset");
  if (!down_closed(p, ideal.members())) throw NotDownClosed("subset is not down-closed");
  HibiMonomial m;
  m.t_degree = 1;
  m.exponents.assign(p.size(), 0);
  for (ElementId x : ideal.members()) m.exponents[x] = 1;
  return m;
}

std::vector<HibiMonomial> generators(const Poset& p, const Caps& caps) {
  std::vector<HibiMonomial> gens;
  for (const PosetIdeal& ideal : enumerate_ideals(p, caps)) gens.push_back(phi(p, ideal));
  return gens;
}

bool in_semigroup(const Poset& p, const HibiMonomial& m) {
  if (m.exponents.size() != p.size())
    throw DomainError("exponent vector does not match the poset size");
  if (m.t_degree < 0) return false;
  for (std::int64_t s : m.exponents)
    if (s < 0 || s > m.t_degree) return false;
  for (const auto& [x, y] : p.cover_pairs())
    if (m.exponents[x] < m.exponents[y]) return false;
  return true;
}

std::size_t dimension(const Poset& p) { return p.size() + 1; }

std::vector<std::vector<int>> cone_generators(const Poset& p, const Caps& caps) {
  std::vector<std::vector<int>> rays;
  for (const PosetIdeal& ideal : enumerate_ideals(p, caps)) {
    std::vector<int> u(p.size() + 1, 0);
    u[0] = 1;  // u_T
    for (ElementId x : ideal.members()) u[1 + x] = 1;
    rays.push_back(std::move(u));
  }
  return rays;
}

HibiMonomial monomial_mul(const HibiMonomial& a, const HibiMonomial& b) {
  if (a.exponents.size() != b.exponents.size()) throw DomainError("monomials over different posets");
  HibiMonomial out;
  out.t_degree = a.t_degree + b.t_degree;
  out.exponents.resize(a.exponents.size());
  for (std::size_t i = 0; i < a.exponents.size(); ++i) out.exponents[i] = a.exponents[i] + b.exponents[i];
  return out;
}

std::vector<PosetIdeal> factor_into_generators(const Poset& p, const HibiMonomial& m) {
  if (!in_semigroup(p, m)) throw DomainError("monomial is not in the Hibi semigroup");
  std::vector<PosetIdeal> factors;
  for (std::int64_t level = 1; level <= m.t_degree; ++level) {
    std::vector<ElementId> members;
    for (ElementId x = 0; x < p.size(); ++x)
      if (m.exponents[x] >= level) members.push_back(x);
    factors.push_back(PosetIdeal::from_members(p, std::move(members)));
  }
  return factors;
}

std::vector<HibiMonomial> semigroup_monomials(const Poset& p, std::int64_t t_degree) {
  std::vector<HibiMonomial> out;
  if (t_degree < 0) return out;
  const std::size_t n = p.size();
  std::vector<std::int64_t> s(n, 0);

  // Assign exponents from the last element down so the first coordinate
  // varies fastest (colexicographic output order). Bounds come from the
  // already-assigned comparable elements.
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == 0) {
      out.push_back({t_degree, s});
      return;
    }
    const ElementId e = static_cast<ElementId>(idx - 1);
    std::int64_t lo = 0, hi = t_degree;
    for (std::size_t j = idx; j < n; ++j) {
      ElementId other = static_cast<ElementId>(j);
      if (p.less(e, other)) lo = std::max(lo, s[other]);  // e below: larger exponent
      if (p.less(other, e)) hi = std::min(hi, s[other]);
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      s[e] = v;
      self(self, idx - 1);
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace hibi
