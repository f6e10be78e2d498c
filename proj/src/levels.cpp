#include "hibi/levels.hpp"

#include <algorithm>
#include <string>

#include "hibi/errors.hpp"

namespace hibi {

namespace {

StarPath witness_from(const ExtendedPoset& ext, const std::vector<std::vector<ElementId>>& lambda,
                      const std::vector<int>& psi) {
  const Poset& pb = ext.poset;
  auto in_lambda = [&](ElementId v, int level) {
    const auto& set = lambda[static_cast<std::size_t>(level)];
    return std::find(set.begin(), set.end(), v) != set.end();
  };

  std::vector<ElementId> vertices{ext.bottom()};
  ElementId cur = ext.bottom();
  int level = psi[cur];
  while (cur != ext.top()) {
    if (in_lambda(cur, level)) {
      // step up into the previous level
      ElementId next = cur;
      bool found = false;
      for (ElementId w : pb.covers_above(cur)) {
        if (psi[w] == level - 1) {
          next = w;
          found = true;
          break;
        }
      }
      if (!found)
        throw InternalDisagreement("level walk found no upward cover from " + pb.name(cur));
      vertices.push_back(next);
      cur = next;
      --level;
    } else {
      // descend inside the level toward its λ part
      ElementId next = cur;
      bool found = false;
      for (ElementId w : pb.covers_below(cur)) {
        if (psi[w] == level) {
          next = w;
          found = true;
          break;
        }
      }
      if (!found)
        throw InternalDisagreement("level walk found no descent from " + pb.name(cur));
      vertices.push_back(next);
      cur = next;
    }
  }
  return make_path(pb, std::move(vertices));
}

}  // namespace

LevelLabeling compute_levels(const Poset& p) {
  LevelLabeling out;
  out.extended = extend(p);
  const Poset& pb = out.extended.poset;
  const std::size_t n = pb.size();

  out.psi.assign(n, -1);
  out.lambda.push_back({out.extended.top()});
  out.Lambda.push_back({out.extended.top()});
  out.psi[out.extended.top()] = 0;

  while (out.psi[out.extended.bottom()] < 0) {
    const int level = static_cast<int>(out.Lambda.size());
    std::vector<ElementId> lam;
    for (ElementId q : out.Lambda.back())
      for (ElementId x : pb.covers_below(q))
        if (out.psi[x] < 0) lam.push_back(x);
    std::sort(lam.begin(), lam.end());
    lam.erase(std::unique(lam.begin(), lam.end()), lam.end());
    if (lam.empty())
      throw InternalDisagreement("level iteration stalled before reaching the bottom element");

    std::vector<ElementId> Lam;
    for (ElementId x = 0; x < n; ++x) {
      if (out.psi[x] >= 0) continue;
      for (ElementId q : lam) {
        if (pb.leq(q, x)) {
          Lam.push_back(x);
          break;
        }
      }
    }
    for (ElementId x : Lam) out.psi[x] = level;
    out.lambda.push_back(std::move(lam));
    out.Lambda.push_back(std::move(Lam));
  }

  out.witness = witness_from(out.extended, out.lambda, out.psi);
  return out;
}

int fpt_by_levels(const Poset& p) {
  const LevelLabeling labeling = compute_levels(p);
  return labeling.psi[labeling.extended.bottom()];
}

bool sigma_feasible(const ExtendedPoset& ext, const SigmaFunction& f) {
  if (f.values.size() != ext.poset.size()) return false;
  if (f.values[ext.top()] != 0) return false;
  for (const auto& [x, y] : ext.poset.cover_pairs()) {
    const std::int64_t d = f.values[x] - f.values[y];
    if (d < 0 || d > 1) return false;
  }
  return true;
}

SigmaFunction psi_as_sigma(const LevelLabeling& labeling) {
  SigmaFunction f;
  f.values.assign(labeling.psi.begin(), labeling.psi.end());
  if (!sigma_feasible(labeling.extended, f))
    throw InfeasibleLabeling("level labeling violates a dual feasibility constraint");
  return f;
}

StarPath extract_witness_path(const LevelLabeling& labeling) {
  return witness_from(labeling.extended, labeling.lambda, labeling.psi);
}

bool check_weak_duality(const Poset& p, const SigmaFunction& f, const Caps& caps) {
  const ExtendedPoset ext = extend(p);
  if (f.values.size() != ext.poset.size())
    throw DomainError("dual function does not match the extended poset");
  const std::int64_t bound = f.values[ext.bottom()];
  for (const StarPath& c : enumerate_maximal_star_paths(ext.poset, caps))
    if (bound > upper_length(c)) return false;
  return true;
}

}  // namespace hibi
