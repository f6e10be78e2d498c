#include "hibi/families.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hibi/errors.hpp"
#include "hibi/io.hpp"
#include "hibi/paths.hpp"

namespace hibi {

namespace {

using Relations = std::vector<std::pair<std::string, std::string>>;

// Accumulates elements in first-mention order next to the relation list.
struct Builder {
  std::vector<std::string> elements;
  Relations relations;

  void element(const std::string& name) {
    for (const std::string& e : elements)
      if (e == name) return;
    elements.push_back(name);
  }

  void cover(const std::string& lo, const std::string& hi) {
    element(lo);
    element(hi);
    relations.emplace_back(lo, hi);
  }

  // lo ⋖ v_1 ⋖ ... ⋖ v_k ⋖ hi with fresh interior names.
  void connector(const std::string& lo, const std::string& hi, int edges,
                 const std::string& interior_prefix) {
    std::string prev = lo;
    for (int k = 2; k <= edges; ++k) {
      std::string v = interior_prefix + std::to_string(k);
      cover(prev, v);
      prev = v;
    }
    cover(prev, hi);
  }

  Poset build() { return Poset::build(std::move(elements), relations); }
};

std::string col(int i, int j) { return "q" + std::to_string(i) + "_" + std::to_string(j); }
std::string primed(int i) { return "q'" + std::to_string(i) + "_"; }

}  // namespace

Poset chain(std::size_t n) {
  Builder b;
  for (std::size_t i = 1; i <= n; ++i) b.element("c" + std::to_string(i));
  for (std::size_t i = 1; i + 1 <= n; ++i)
    b.cover("c" + std::to_string(i), "c" + std::to_string(i + 1));
  return b.build();
}

Poset antichain(std::size_t n) {
  Builder b;
  for (std::size_t i = 1; i <= n; ++i) b.element("a" + std::to_string(i));
  return b.build();
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  Builder out;
  for (const std::string& name : a.elements()) out.element("a." + name);
  for (const auto& [x, y] : a.cover_pairs()) out.cover("a." + a.name(x), "a." + a.name(y));
  for (const std::string& name : b.elements()) out.element("b." + name);
  for (const auto& [x, y] : b.cover_pairs()) out.cover("b." + b.name(x), "b." + b.name(y));
  return out.build();
}

Poset segre_poset(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw BadParameters("Segre parameters must both be at least 2");
  Builder b;
  for (std::size_t i = 1; i + 1 <= m; ++i) b.element("p" + std::to_string(i));
  for (std::size_t i = 1; i + 2 <= m; ++i)
    b.cover("p" + std::to_string(i), "p" + std::to_string(i + 1));
  for (std::size_t i = 1; i + 1 <= n; ++i) b.element("q" + std::to_string(i));
  for (std::size_t i = 1; i + 2 <= n; ++i)
    b.cover("q" + std::to_string(i), "q" + std::to_string(i + 1));
  return b.build();
}

Poset example_poset(std::string_view tag) {
  Builder b;
  if (tag == "ex1_2") {
    for (const char* e : {"1", "2", "3", "4"}) b.element(e);
    b.cover("1", "3");
    b.cover("2", "3");
    b.cover("2", "4");
  } else if (tag == "ex1_9") {
    for (int i = 1; i <= 6; ++i) b.element("q" + std::to_string(i));
    b.cover("q1", "q2");
    b.cover("q2", "q3");
    b.cover("q4", "q3");
    b.cover("q5", "q4");
    b.cover("q5", "q2");
    b.cover("q5", "q6");
  } else if (tag == "ex1_11") {
    for (int i = 1; i <= 6; ++i) b.element("q" + std::to_string(i));
    b.cover("q1", "q2");
    b.cover("q2", "q3");
    b.cover("q4", "q2");
    b.cover("q4", "q5");
    b.cover("q5", "q6");
  } else {
    throw UnknownTag("unknown example tag '" + std::string(tag) + "'");
  }
  return b.build();
}

Poset example44_poset(int a, int b, int c, const Caps& caps) {
  if (!(1 <= c && c <= b && b <= a)) throw BadParameters("need 1 <= c <= b <= a");

  Builder out;
  auto column = [&](int i) {
    for (int j = 1; j <= b; ++j) out.cover(col(i, j), col(i, j + 1));
  };

  if (a == b) {
    // One column plus a side chain of length c growing from the bottom; the
    // side chain is the shortest maximal (*)-path.
    column(1);
    out.connector(col(1, 1), primed(1) + std::to_string(c + 1), c, primed(1));
  } else if (a < 2 * b) {
    // One descent between two full columns. The connector leaves column 1 at
    // height r+1, which yields the a = b + r upward steps of the long path.
    const int r = a - b;
    column(1);
    column(2);
    if (c > b - r) {
      // connector of c - (b - r) edges; climbing it and finishing column 1
      // gives exactly c upward steps
      out.connector(col(2, 1), col(1, r + 1), c - b + r, primed(1));
    } else {
      // direct edge; a separate side chain of length c from the bottom of
      // column 1 realizes the lower rank
      out.cover(col(2, 1), col(1, r + 1));
      out.connector(col(1, 1), primed(1) + std::to_string(c + 1), c, primed(1));
    }
  } else {
    // e full columns; writing a = (e-1)b + r with 1 <= r <= b, the zigzag
    // through all columns has (e-2)b + r + b = a upward steps. The early
    // connectors drop from the column tops with c edges each; the last one
    // leaves column e-1 at height r+1 with f edges so that the shortest
    // maximal (*)-path has length c.
    const int e = (a + b - 1) / b;
    const int r = a - (e - 1) * b;
    const int f = c > b - r ? c - b + r : 1;
    for (int i = 1; i <= e; ++i) column(i);
    for (int i = 1; i <= e - 2; ++i) out.connector(col(i + 1, 1), col(i, b + 1), c, primed(i));
    out.connector(col(e, 1), col(e - 1, r + 1), f, primed(e - 1));
  }

  Poset poset = out.build();

  const StarRanks ranks = star_ranks(poset, caps);
  const bool ok = poset.is_connected() && ranks.upper.value == a && poset.rank() == b &&
                  ranks.lower.value == c;
  if (!ok) {
    throw ConstructionMismatch(
        "construction for (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
        std::to_string(c) + ") analyzed as (" + std::to_string(ranks.upper.value) + ", " +
        std::to_string(poset.rank()) + ", " + std::to_string(ranks.lower.value) +
        "), connected=" + (poset.is_connected() ? "true" : "false") + "; poset: " + poset_to_json(poset));
  }
  return poset;
}

Poset random_poset(std::mt19937_64& rng, std::size_t max_elements) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_elements)(rng);
  const double edge_prob = std::uniform_real_distribution<double>(0.05, 0.7)(rng);

  Builder b;
  for (std::size_t i = 1; i <= n; ++i) b.element("e" + std::to_string(i));

  // Relations follow a hidden shuffled topological order, so declaration
  // order and the partial order are independent.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);

  std::bernoulli_distribution flip(edge_prob);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (flip(rng))
        b.relations.emplace_back("e" + std::to_string(order[i]), "e" + std::to_string(order[j]));
  return b.build();
}

}  // namespace hibi
