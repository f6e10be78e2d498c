#include "hibi/analyze.hpp"

#include <algorithm>
#include <string>

#include "hibi/errors.hpp"
#include "hibi/families.hpp"
#include "hibi/frobenius.hpp"
#include "hibi/ideals.hpp"
#include "hibi/levels.hpp"
#include "hibi/paths.hpp"

namespace hibi {

namespace {

std::vector<std::string> path_names(const Poset& p, const StarPath& c) {
  std::vector<std::string> out;
  out.reserve(c.vertices.size());
  for (ElementId v : c.vertices) out.push_back(p.name(v));
  return out;
}

}  // namespace

InvariantReport analyze(const Poset& p, const Caps& caps) {
  const StarRanks ranks = star_ranks(p, caps);
  const LevelLabeling labeling = compute_levels(p);
  const int fpt_levels = labeling.psi[labeling.extended.bottom()];

  if (fpt_levels != ranks.lower.value + 2) {
    std::string msg = "fpt disagreement: levels say " + std::to_string(fpt_levels) +
                      ", path search says " + std::to_string(ranks.lower.value + 2) +
                      "; level witness " +
                      (labeling.witness.vertices.empty() ? "none" : labeling.extended.poset.name(labeling.witness.vertices[0]));
    for (std::size_t i = 1; i < labeling.witness.vertices.size(); ++i)
      msg += " -> " + labeling.extended.poset.name(labeling.witness.vertices[i]);
    if (ranks.lower.witness) {
      msg += "; path witness ";
      for (std::size_t i = 0; i < ranks.lower.witness->vertices.size(); ++i)
        msg += (i ? " -> " : "") + p.name(ranks.lower.witness->vertices[i]);
    }
    throw InternalDisagreement(msg);
  }

  InvariantReport r;
  r.n_elements = p.size();
  r.dim = dimension(p);
  r.rank = p.rank();
  r.upper_rank = ranks.upper.value;
  r.lower_rank = ranks.lower.value;
  r.c_diagonal = ranks.upper.value + 2;
  r.fpt = fpt_levels;
  r.minus_a = p.rank() + 2;
  r.min_maximal_chain = p.min_maximal_chain();
  r.pure = p.is_pure();
  r.gorenstein = r.pure;
  r.inequality_ok = r.fpt <= r.min_maximal_chain + 2 && r.min_maximal_chain + 2 <= r.minus_a &&
                    r.minus_a <= r.c_diagonal;

  if (ranks.upper.witness) r.witnesses.upper_path = path_names(p, *ranks.upper.witness);
  if (ranks.lower.witness) r.witnesses.lower_path = path_names(p, *ranks.lower.witness);
  r.witnesses.level_path = path_names(labeling.extended.poset, labeling.witness);
  for (ElementId v = 0; v < labeling.extended.poset.size(); ++v)
    r.witnesses.psi.emplace_back(labeling.extended.poset.name(v), labeling.psi[v]);
  return r;
}

InvariantReport segre_invariants(std::size_t m, std::size_t n, const Caps& caps) {
  InvariantReport r = analyze(segre_poset(m, n), caps);
  const int hi = static_cast<int>(std::max(m, n));
  const int lo = static_cast<int>(std::min(m, n));
  if (r.c_diagonal != hi || r.minus_a != hi || r.fpt != lo)
    throw InternalDisagreement("Segre invariants for (" + std::to_string(m) + ", " +
                               std::to_string(n) + ") came out as c=" + std::to_string(r.c_diagonal) +
                               ", -a=" + std::to_string(r.minus_a) + ", fpt=" + std::to_string(r.fpt));
  return r;
}

bool verify_against_oracle(const Poset& p, const std::vector<long>& qs, const Caps& caps) {
  const long c = upper_rank(p, caps) + 2;
  for (long q : qs) {
    const FrobeniusReport report = frobenius_nu(p, q, caps);
    if (report.nu != c * (q - 1)) return false;
  }
  return true;
}

}  // namespace hibi
