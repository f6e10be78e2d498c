#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hibi/errors.hpp"
#include "hibi/families.hpp"
#include "hibi/ideals.hpp"
#include "hibi/paths.hpp"
#include "test_util.hpp"

using namespace hibi;

TEST_CASE("chains, antichains, unions") {
  CHECK(chain(3).rank() == 2);
  CHECK(chain(0).empty());
  CHECK(antichain(2).rank() == 0);
  CHECK(upper_rank(antichain(2)) == 0);

  const Poset u = disjoint_union(chain(2), chain(3));
  CHECK(u.rank() == 2);
  CHECK(u.size() == 5);
  CHECK_FALSE(u.is_connected());
  CHECK_FALSE(u.leq("a.c1", "b.c1"));
}

TEST_CASE("Segre posets") {
  const Poset s22 = segre_poset(2, 2);
  CHECK(s22.size() == 2);
  CHECK(s22.cover_pairs().empty());

  const Poset s34 = segre_poset(3, 4);
  CHECK(s34.size() == 5);
  CHECK(s34.rank() == 2);  // chains of lengths 1 and 2
  CHECK(s34.leq("q1", "q3"));
  CHECK_FALSE(s34.leq("p1", "q1"));

  const Poset s25 = segre_poset(2, 5);
  CHECK(s25.size() == 5);
  CHECK(s25.rank() == 3);

  CHECK_THROWS_AS(segre_poset(1, 3), BadParameters);
}

TEST_CASE("worked examples") {
  const Poset p12 = example_poset("ex1_2");
  CHECK(enumerate_ideals(p12).size() == 8);

  const Poset p11 = example_poset("ex1_11");
  const StarRanks r = star_ranks(p11);
  CHECK(r.upper.value == 3);
  CHECK(p11.rank() == 2);
  CHECK(r.lower.value == 2);

  const Poset p19 = example_poset("ex1_9");
  CHECK_FALSE(satisfies_star(p19, make_path(p19, std::vector<std::string>{"q1", "q2", "q3", "q4", "q5", "q6"})));

  CHECK_THROWS_AS(example_poset("ex9_9"), UnknownTag);
}

TEST_CASE("prescribed rank triples") {
  CHECK_THROWS_AS(example44_poset(1, 2, 3), BadParameters);
  CHECK_THROWS_AS(example44_poset(3, 2, 0), BadParameters);

  SUBCASE("spec'd instances") {
    const Poset p322 = example44_poset(3, 2, 2);
    CHECK(star_ranks(p322).upper.value == 3);
    CHECK(p322.rank() == 2);
    CHECK(star_ranks(p322).lower.value == 2);

    const Poset p421 = example44_poset(4, 2, 1);
    CHECK(star_ranks(p421).upper.value == 4);
    CHECK(p421.rank() == 2);
    CHECK(star_ranks(p421).lower.value == 1);

    for (int b = 1; b <= 4; ++b) {
      const Poset pb = example44_poset(b, b, b);
      CHECK(star_ranks(pb).upper.value == b);
      CHECK(pb.rank() == b);
      CHECK(star_ranks(pb).lower.value == b);
    }
  }

  SUBCASE("sweep stays connected and verified") {
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= a; ++b)
        for (int c = 1; c <= b; ++c) {
          const Poset p = example44_poset(a, b, c);
          CHECK(p.is_connected());
          const StarRanks ranks = star_ranks(p);
          CHECK(ranks.upper.value == a);
          CHECK(p.rank() == b);
          CHECK(ranks.lower.value == c);
        }
  }
}

TEST_CASE("random poset helper is deterministic") {
  std::mt19937_64 a(42), b(42);
  for (int k = 0; k < 20; ++k) CHECK(random_poset(a, 6) == random_poset(b, 6));
}
