#pragma once

#include <cstdint>
#include <vector>

#include "hibi/config.hpp"
#include "hibi/paths.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// The level partition of P̄ = P plus bottom/top produced by peeling from the
/// top: λ_i are the unassigned elements covered by something in Λ_{i-1},
/// Λ_i their upward closure among the unassigned. ψ(bottom) equals the
/// F-pure threshold of the Hibi ring of P.
struct LevelLabeling {
  ExtendedPoset extended;
  std::vector<std::vector<ElementId>> lambda;  // λ_0 .. λ_L
  std::vector<std::vector<ElementId>> Lambda;  // Λ_0 .. Λ_L
  std::vector<int> psi;                        // level per P̄ element
  StarPath witness;                            // (*)-path in P̄ with len* = ψ(bottom)
};

LevelLabeling compute_levels(const Poset& p);

/// ψ(bottom); equals lower_rank(P) + 2.
int fpt_by_levels(const Poset& p);

/// Integer member of the dual feasible set: f(top) = 0 and
/// 0 <= f(x) - f(y) <= 1 along every cover x ⋖ y of P̄.
struct SigmaFunction {
  std::vector<std::int64_t> values;  // indexed by P̄ element
};

bool sigma_feasible(const ExtendedPoset& ext, const SigmaFunction& f);

/// ψ as a feasible dual function; throws InfeasibleLabeling if a cover
/// constraint fails (which would be a bug in compute_levels).
SigmaFunction psi_as_sigma(const LevelLabeling& labeling);

/// Walks bottom to top, stepping up one level at a time through the λ sets
/// and descending inside a level to reach them; the result satisfies (*) and
/// has upper length ψ(bottom).
StarPath extract_witness_path(const LevelLabeling& labeling);

/// f(bottom) <= len*(C) for every maximal (*)-path C of P̄. Combined with a
/// path attaining the value, this certifies optimality of the labeling.
bool check_weak_duality(const Poset& p, const SigmaFunction& f, const Caps& caps = default_caps());

}  // namespace hibi
