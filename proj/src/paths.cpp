#include "hibi/paths.hpp"

#include <algorithm>
#include <string>

#include "hibi/errors.hpp"

namespace hibi {

namespace {

std::string path_text(const Poset& p, const std::vector<ElementId>& vs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += p.name(vs[i]);
  }
  out += ")";
  return out;
}

}  // namespace

StarPath make_path(const Poset& p, std::vector<ElementId> vertices) {
  if (vertices.empty()) throw DomainError("a path needs at least one vertex");
  for (ElementId v : vertices)
    if (v >= p.size()) throw UnknownElement("path vertex id out of range");
  {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("path vertices must be distinct: " + path_text(p, vertices));
  }
  if (!p.is_minimal(vertices.front()))
    throw DomainError("path must start at a minimal element: " + path_text(p, vertices));

  StarPath c;
  c.vertices = std::move(vertices);
  c.ups.reserve(c.vertices.size());
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
    ElementId a = c.vertices[i], b = c.vertices[i + 1];
    if (p.covers(a, b))
      c.ups.push_back(1);
    else if (p.covers(b, a))
      c.ups.push_back(0);
    else
      throw DomainError("consecutive path vertices must form a cover: " + path_text(p, c.vertices));
  }
  if (!c.ups.empty() && !c.ups.back())
    throw DomainError("the final step of a path must go upward: " + path_text(p, c.vertices));
  return c;
}

StarPath make_path(const Poset& p, const std::vector<std::string>& names) {
  std::vector<ElementId> ids;
  ids.reserve(names.size());
  for (const std::string& n : names) ids.push_back(p.id_of(n));
  return make_path(p, std::move(ids));
}

bool is_maximal_path(const Poset& p, const StarPath& c) {
  return !c.vertices.empty() && p.is_maximal(c.vertices.back());
}

int upper_length(const StarPath& c) {
  return static_cast<int>(std::count(c.ups.begin(), c.ups.end(), std::uint8_t{1}));
}

PathDecomposition decompose(const StarPath& c) {
  PathDecomposition d;
  if (c.vertices.empty()) return d;
  d.pieces.push_back({true, {c.vertices[0]}});
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
    const bool up = c.ups[i] != 0;
    if (up == d.pieces.back().ascending) {
      d.pieces.back().vertices.push_back(c.vertices[i + 1]);
    } else {
      d.pieces.push_back({up, {c.vertices[i + 1]}});
    }
  }
  return d;
}

PosetIdeal principal_ideal_of_run(const Poset& p, const std::vector<ElementId>& run) {
  if (run.empty()) return PosetIdeal{};
  return PosetIdeal::principal(p, run.back());
}

bool satisfies_star(const Poset& p, const StarPath& c) {
  const PathDecomposition d = decompose(c);
  const std::size_t pieces = d.pieces.size();
  if (pieces <= 1) return true;

  // cum marks the union of <A_m> over the ascending runs seen so far.
  std::vector<std::uint8_t> cum(p.size(), 0);
  const std::size_t n_asc = (pieces + 1) / 2;
  for (std::size_t i = 1; i + 1 <= n_asc; ++i) {
    const auto& asc = d.pieces[2 * (i - 1)];
    const auto& desc = d.pieces[2 * i - 1];
    const auto& next_asc = d.pieces[2 * i];

    std::vector<ElementId> head(asc.vertices.begin(), asc.vertices.end() - 1);
    const PosetIdeal head_ideal = principal_ideal_of_run(p, head);
    const ElementId top = asc.vertices.back();
    for (ElementId v : desc.vertices)
      if (cum[v] || head_ideal.contains(v) || v == top) return false;

    for (ElementId z = 0; z < p.size(); ++z)
      if (p.leq(z, top)) cum[z] = 1;

    for (ElementId v : next_asc.vertices)
      if (cum[v]) return false;
  }
  return true;
}

bool satisfies_star_pivot(const Poset& p, const StarPath& c) {
  const std::size_t len = c.vertices.size();
  if (len <= 2) return true;

  auto is_pivot = [&](std::size_t r) {
    if (r == 0 || r + 1 == len) return true;  // endpoints count by convention
    return c.ups[r - 1] != c.ups[r];
  };
  for (std::size_t r = 1; r + 1 < len; ++r) {
    if (!is_pivot(r)) continue;
    for (std::size_t s = r + 1; s < len; ++s)
      for (std::size_t t = 0; t < r; ++t)
        if (p.leq(c.vertices[s], c.vertices[t])) return false;
  }
  return true;
}

StarPath extend_to_maximal(const Poset& p, const StarPath& c) {
  if (!satisfies_star(p, c))
    throw StarViolation("path does not satisfy condition (*): " + path_text(p, c.vertices));

  StarPath cur = c;
  while (!p.is_maximal(cur.vertices.back())) {
    ElementId last = cur.vertices.back();
    bool appended = false;
    for (ElementId w : p.covers_above(last)) {
      if (std::find(cur.vertices.begin(), cur.vertices.end(), w) != cur.vertices.end()) continue;
      cur.vertices.push_back(w);
      cur.ups.push_back(1);
      appended = true;
      break;
    }
    if (!appended)
      throw InternalDisagreement("extend_to_maximal got stuck on " + path_text(p, cur.vertices));
  }
  if (!satisfies_star(p, cur))
    throw InternalDisagreement("extend_to_maximal broke condition (*): " + path_text(p, cur.vertices));
  return cur;
}

namespace {

class PathSearch {
 public:
  PathSearch(const Poset& p, const PathQuery& q, const Caps& caps)
      : p_(p), q_(q), cap_(caps.max_states) {}

  std::vector<StarPath> run() {
    visited_.assign(p_.size(), 0);
    for (ElementId m : p_.minimal_elements()) {
      path_.assign(1, m);
      ups_.clear();
      visited_[m] = 1;
      last_pivot_ = 0;
      dfs();
      visited_[m] = 0;
    }
    std::sort(out_.begin(), out_.end(),
              [](const StarPath& a, const StarPath& b) { return a.vertices < b.vertices; });
    return std::move(out_);
  }

 private:
  void dfs() {
    if (++states_ > cap_)
      throw SearchCapExceeded("path search exceeded " + std::to_string(cap_) + " states");

    const ElementId last = path_.back();
    const bool path_valid = path_.size() == 1 || ups_.back();
    if (path_valid && (!q_.maximal_only || p_.is_maximal(last))) emit();

    for (ElementId w : p_.covers_above(last)) step(w, true);
    for (ElementId w : p_.covers_below(last)) step(w, false);
  }

  void step(ElementId w, bool up) {
    if (visited_[w]) return;

    const std::size_t saved_pivot = last_pivot_;
    if (path_.size() >= 2 && (ups_.back() != 0) != up) last_pivot_ = path_.size() - 1;
    if (q_.star_only) {
      for (std::size_t t = 0; t < last_pivot_; ++t) {
        if (p_.leq(w, path_[t])) {
          last_pivot_ = saved_pivot;
          return;
        }
      }
    }

    path_.push_back(w);
    ups_.push_back(up ? 1 : 0);
    visited_[w] = 1;
    dfs();
    visited_[w] = 0;
    ups_.pop_back();
    path_.pop_back();
    last_pivot_ = saved_pivot;
  }

  void emit() {
    StarPath c{path_, ups_};
    // The incremental pivot pruning already guarantees this; keep the
    // declarative definition as the final arbiter.
    if (q_.star_only && !satisfies_star(p_, c)) return;
    out_.push_back(std::move(c));
  }

  const Poset& p_;
  PathQuery q_;
  std::uint64_t cap_;
  std::uint64_t states_ = 0;
  std::vector<ElementId> path_;
  std::vector<std::uint8_t> ups_;
  std::vector<std::uint8_t> visited_;
  std::size_t last_pivot_ = 0;
  std::vector<StarPath> out_;
};

}  // namespace

std::vector<StarPath> enumerate_paths(const Poset& p, const PathQuery& query, const Caps& caps) {
  return PathSearch(p, query, caps).run();
}

std::vector<StarPath> enumerate_maximal_star_paths(const Poset& p, const Caps& caps) {
  return enumerate_paths(p, PathQuery{.maximal_only = true, .star_only = true}, caps);
}

StarRanks star_ranks(const Poset& p, const Caps& caps) {
  StarRanks ranks;
  const std::vector<StarPath> paths = enumerate_maximal_star_paths(p, caps);
  for (const StarPath& c : paths) {
    const int len = upper_length(c);
    if (!ranks.upper.witness || len > ranks.upper.value) ranks.upper = {len, c};
    if (!ranks.lower.witness || len < ranks.lower.value) ranks.lower = {len, c};
  }
  return ranks;
}

int upper_rank(const Poset& p, const Caps& caps) { return star_ranks(p, caps).upper.value; }

int lower_rank(const Poset& p, const Caps& caps) { return star_ranks(p, caps).lower.value; }

}  // namespace hibi
