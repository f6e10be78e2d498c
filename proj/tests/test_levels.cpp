#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hibi/errors.hpp"
#include "hibi/families.hpp"
#include "hibi/levels.hpp"
#include "hibi/paths.hpp"
#include "test_util.hpp"

using namespace hibi;
using test::mk;
using test::names_of;

namespace {

std::vector<std::string> level_names(const LevelLabeling& l, std::size_t i) {
  return names_of(l.extended.poset, l.Lambda.at(i));
}

}  // namespace

TEST_CASE("levels of the three-rank example") {
  const LevelLabeling l = compute_levels(example_poset("ex1_11"));
  REQUIRE(l.Lambda.size() == 5);
  CHECK(level_names(l, 1) == std::vector<std::string>{"q3", "q6"});
  CHECK(level_names(l, 2) == std::vector<std::string>{"q2", "q5"});
  CHECK(level_names(l, 3) == std::vector<std::string>{"q1", "q4"});
  CHECK(level_names(l, 4) == std::vector<std::string>{"-inf"});
  CHECK(l.psi[l.extended.bottom()] == 4);
  CHECK(l.psi[l.extended.top()] == 0);
}

TEST_CASE("levels pull incomparable elements upward") {
  const LevelLabeling l = compute_levels(example_poset("ex1_9"));
  CHECK(level_names(l, 2) == std::vector<std::string>{"q2", "q4", "q5"});
  CHECK(l.psi[l.extended.bottom()] == 3);
}

TEST_CASE("fpt by levels") {
  CHECK(fpt_by_levels(example_poset("ex1_11")) == 4);
  CHECK(fpt_by_levels(segre_poset(2, 3)) == 2);
  CHECK(fpt_by_levels(mk({})) == 1);
  CHECK(fpt_by_levels(mk({"p"})) == 2);
  CHECK(fpt_by_levels(example_poset("ex1_2")) == 3);
}

TEST_CASE("psi is a feasible dual function") {
  const LevelLabeling single = compute_levels(mk({"p"}));
  const SigmaFunction f = psi_as_sigma(single);
  CHECK(f.values == std::vector<std::int64_t>{1, 2, 0});  // p, bottom, top

  const LevelLabeling l11 = compute_levels(example_poset("ex1_11"));
  CHECK(sigma_feasible(l11.extended, psi_as_sigma(l11)));

  const LevelLabeling l12 = compute_levels(example_poset("ex1_2"));
  const SigmaFunction f12 = psi_as_sigma(l12);
  CHECK(f12.values[l12.extended.bottom()] == 3);

  SigmaFunction bad = f12;
  bad.values[l12.extended.top()] = 5;
  CHECK_FALSE(sigma_feasible(l12.extended, bad));
}

TEST_CASE("witness path extraction") {
  const LevelLabeling l19 = compute_levels(example_poset("ex1_9"));
  CHECK(names_of(l19.extended.poset, l19.witness.vertices) ==
        std::vector<std::string>{"-inf", "q5", "q6", "+inf"});
  CHECK(upper_length(l19.witness) == 3);

  const LevelLabeling lc = compute_levels(chain(3));
  CHECK(names_of(lc.extended.poset, lc.witness.vertices) ==
        std::vector<std::string>{"-inf", "c1", "c2", "c3", "+inf"});

  const LevelLabeling l11 = compute_levels(example_poset("ex1_11"));
  CHECK(upper_length(l11.witness) == 4);
  CHECK(extract_witness_path(l11).vertices == l11.witness.vertices);
}

TEST_CASE("weak duality certificate") {
  const Poset p11 = example_poset("ex1_11");
  const LevelLabeling l11 = compute_levels(p11);
  CHECK(check_weak_duality(p11, psi_as_sigma(l11)));
  CHECK(upper_length(l11.witness) == l11.psi[l11.extended.bottom()]);

  SigmaFunction zero;
  zero.values.assign(l11.extended.poset.size(), 0);
  CHECK(check_weak_duality(p11, zero));

  const Poset p12 = example_poset("ex1_2");
  const LevelLabeling l12 = compute_levels(p12);
  CHECK(check_weak_duality(p12, psi_as_sigma(l12)));
  CHECK(lower_rank(l12.extended.poset) == 3);
}

TEST_CASE("level-order property and strong duality on the pool") {
  for (const Poset& p : test::poset_pool(150, 5)) {
    const LevelLabeling l = compute_levels(p);
    const Poset& pb = l.extended.poset;

    // the iteration finishes within #P + 2 rounds and partitions everything
    CHECK(l.Lambda.size() <= p.size() + 3);
    std::size_t covered = 0;
    for (const auto& level : l.Lambda) covered += level.size();
    CHECK(covered == pb.size());
    for (std::size_t i = 0; i < l.lambda.size(); ++i)
      for (ElementId v : l.lambda[i])
        CHECK(std::find(l.Lambda[i].begin(), l.Lambda[i].end(), v) != l.Lambda[i].end());

    // no element of a deeper level sits above a shallower one
    for (ElementId a = 0; a < pb.size(); ++a)
      for (ElementId b = 0; b < pb.size(); ++b)
        if (l.psi[a] > l.psi[b]) CHECK_FALSE(pb.less(b, a));

    // three independent computations of fpt agree
    const int by_levels = l.psi[l.extended.bottom()];
    CHECK(by_levels == lower_rank(p) + 2);
    CHECK(by_levels == lower_rank(pb));

    // the witness is a (*)-path attaining the dual bound
    CHECK(satisfies_star(pb, l.witness));
    CHECK(is_maximal_path(pb, l.witness));
    CHECK(upper_length(l.witness) == by_levels);
    const SigmaFunction f = psi_as_sigma(l);
    CHECK(check_weak_duality(p, f));

    // shortest maximal chain bounds fpt
    CHECK(by_levels <= p.min_maximal_chain() + 2);
  }
}
