#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hibi/config.hpp"
#include "hibi/ideals.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// A walk on the Hasse diagram: distinct vertices, the first one minimal,
/// every step a cover in either direction, and the final step (when there is
/// one) going upward. A single minimal vertex is a valid path.
struct StarPath {
  std::vector<ElementId> vertices;
  std::vector<std::uint8_t> ups;  // ups[i] != 0 iff vertices[i] ⋖ vertices[i+1]

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Validates the path axioms and derives the step directions.
/// Throws DomainError on violations.
StarPath make_path(const Poset& p, std::vector<ElementId> vertices);
StarPath make_path(const Poset& p, const std::vector<std::string>& names);

/// Maximal means the path ends at a maximal element of the poset.
bool is_maximal_path(const Poset& p, const StarPath& c);

/// len*: the number of upward steps.
int upper_length(const StarPath& c);

/// The alternating split A_1 + D_1 + ... + A_n: ascending runs end at the
/// locally maximal vertices, descending runs at the locally minimal ones
/// (the start vertex counts as locally minimal, the last as locally maximal).
struct PathDecomposition {
  struct Piece {
    bool ascending = true;
    std::vector<ElementId> vertices;
  };
  std::vector<Piece> pieces;
};

PathDecomposition decompose(const StarPath& c);

/// <A> = {q : q <= t(A)} for the run's final vertex; the empty run gives the
/// empty ideal.
PosetIdeal principal_ideal_of_run(const Poset& p, const std::vector<ElementId>& run);

/// The non-revisiting condition on the decomposition: each descending run
/// and each later ascending run stays clear of the ideals generated by the
/// earlier ascending runs.
bool satisfies_star(const Poset& p, const StarPath& c);

/// Independent formulation of the same condition: after any locally extremal
/// vertex, no later vertex lies below an earlier one.
bool satisfies_star_pivot(const Poset& p, const StarPath& c);

/// Extends a (*)-path to a maximal (*)-path by appending the smallest
/// available cover above the last vertex until it is maximal.
/// Throws StarViolation if the input fails the condition.
StarPath extend_to_maximal(const Poset& p, const StarPath& c);

struct PathQuery {
  bool maximal_only = true;
  bool star_only = true;
};

/// Depth-first enumeration over Hasse walks, pruned by the pivot condition
/// when only (*)-paths are requested. Output is sorted lexicographically by
/// vertex ids. Throws SearchCapExceeded past caps.max_states visited
/// prefixes.
std::vector<StarPath> enumerate_paths(const Poset& p, const PathQuery& query,
                                      const Caps& caps = default_caps());

std::vector<StarPath> enumerate_maximal_star_paths(const Poset& p, const Caps& caps = default_caps());

struct RankWitness {
  int value = -1;
  std::optional<StarPath> witness;  // absent only for the empty poset
};

struct StarRanks {
  RankWitness upper;
  RankWitness lower;
};

/// Upper and lower rank with lexicographically smallest witness paths.
StarRanks star_ranks(const Poset& p, const Caps& caps = default_caps());
int upper_rank(const Poset& p, const Caps& caps = default_caps());
int lower_rank(const Poset& p, const Caps& caps = default_caps());

}  // namespace hibi
