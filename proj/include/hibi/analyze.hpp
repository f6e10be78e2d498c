#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hibi/config.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Certificates backing an InvariantReport, rendered with element names so
/// the report is self-contained.
struct InvariantWitnesses {
  std::vector<std::string> upper_path;             // maximal (*)-path attaining rank*
  std::vector<std::string> lower_path;             // maximal (*)-path attaining rank_*
  std::vector<std::string> level_path;             // (*)-path in P̄ with len* = fpt
  std::vector<std::pair<std::string, int>> psi;    // level labeling of P̄
};

/// Every invariant of the Hibi ring of one poset, cross-checked:
///   c_diagonal = upper_rank + 2,   fpt = lower_rank + 2,   -a = rank + 2,
/// with fpt computed independently through the level labeling.
struct InvariantReport {
  std::size_t n_elements = 0;
  std::size_t dim = 0;
  int rank = -1;
  int upper_rank = -1;
  int lower_rank = -1;
  int c_diagonal = 0;
  int fpt = 0;
  int minus_a = 0;
  int min_maximal_chain = -1;
  bool pure = false;
  bool gorenstein = false;
  bool inequality_ok = false;
  InvariantWitnesses witnesses;
};

/// Computes the full report. Disagreement between the two fpt computations
/// throws InternalDisagreement with both certificates in the message.
InvariantReport analyze(const Poset& p, const Caps& caps = default_caps());

/// analyze(segre_poset(m, n)) with the closed forms asserted:
/// c = -a = max(m, n) and fpt = min(m, n).
InvariantReport segre_invariants(std::size_t m, std::size_t n, const Caps& caps = default_caps());

/// True iff ν(q) == c_diagonal · (q - 1) for every listed q.
bool verify_against_oracle(const Poset& p, const std::vector<long>& qs,
                           const Caps& caps = default_caps());

}  // namespace hibi
