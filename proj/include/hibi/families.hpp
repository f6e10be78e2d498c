#pragma once

#include <random>
#include <string_view>

#include "hibi/config.hpp"
#include "hibi/poset.hpp"

namespace hibi {

Poset chain(std::size_t n);
Poset antichain(std::size_t n);

/// Disjoint union with elements relabeled "a.<name>" / "b.<name>".
Poset disjoint_union(const Poset& a, const Poset& b);

/// The poset whose Hibi ring is the Segre product of polynomial rings in m
/// and n variables: two disjoint chains with m-1 and n-1 elements.
/// Requires m, n >= 2.
Poset segre_poset(std::size_t m, std::size_t n);

/// Small worked examples used throughout the test-suite.
/// Accepted tags: ex1_2, ex1_9, ex1_11. Throws UnknownTag.
Poset example_poset(std::string_view tag);

/// A connected poset with upper rank a, rank b and lower rank c, for any
/// 1 <= c <= b <= a: chains of length b stacked by descending connector
/// chains whose lengths tune the lower rank. The construction is re-analyzed
/// before returning; a disagreement throws ConstructionMismatch with the
/// offending poset serialized.
Poset example44_poset(int a, int b, int c, const Caps& caps = default_caps());

/// Random DAG poset for property tests: at most max_elements elements,
/// relation edges drawn independently. No distribution guarantees.
Poset random_poset(std::mt19937_64& rng, std::size_t max_elements);

}  // namespace hibi
