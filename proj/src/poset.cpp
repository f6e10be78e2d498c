#include "hibi/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "hibi/errors.hpp"

namespace hibi {

namespace {

// Row-major bit matrix; rows are reachability sets.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void row_or(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// DFS cycle check over the declared strict relations; returns a reverse
// postorder (a linear extension with successors first).
std::vector<ElementId> topo_order(const std::vector<std::vector<ElementId>>& succ) {
  const std::size_t n = succ.size();
  std::vector<std::uint8_t> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<ElementId> order;
  order.reserve(n);

  // iterative DFS; (node, next-edge index)
  std::vector<std::pair<ElementId, std::size_t>> stack;
  for (ElementId root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    stack.emplace_back(root, 0);
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      if (k < succ[v].size()) {
        ElementId w = succ[v][k++];
        if (state[w] == 1) throw CycleError("relations contain a cycle through element index " + std::to_string(w));
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset p;
  p.names_ = std::move(elements);
  const std::size_t n = p.names_.size();
  p.ids_.reserve(n);
  for (ElementId i = 0; i < n; ++i) {
    auto [_, fresh] = p.ids_.emplace(p.names_[i], i);
    if (!fresh) throw DuplicateElement("duplicate element '" + p.names_[i] + "'");
  }

  std::vector<std::vector<ElementId>> succ(n);
  for (const auto& [xs, ys] : relations) {
    ElementId x = p.id_of(xs);
    ElementId y = p.id_of(ys);
    if (x == y) throw CycleError("relation '" + xs + " < " + ys + "' forces " + xs + " < " + xs);
    succ[x].push_back(y);
  }

  const std::vector<ElementId> topo = topo_order(succ);

  // Transitive closure along reverse topological order.
  BitMatrix reach(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    ElementId x = *it;
    for (ElementId y : succ[x]) {
      reach.set(x, y);
      reach.row_or(x, y);
    }
  }

  p.less_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.less_[i * n + j] = reach.get(i, j) ? 1 : 0;

  // Transitive reduction: y covers x iff y is not reachable through another
  // strict successor of x. Scanning successors in topological order lets a
  // running reachability union detect redundant pairs.
  std::vector<std::size_t> topo_pos(n);
  for (std::size_t k = 0; k < topo.size(); ++k) topo_pos[topo[k]] = k;

  p.above_.assign(n, {});
  p.below_.assign(n, {});
  std::vector<std::uint8_t> seen(n);
  for (ElementId x = 0; x < n; ++x) {
    std::vector<ElementId> ups;
    for (ElementId y = 0; y < n; ++y)
      if (p.less_[x * n + y]) ups.push_back(y);
    std::sort(ups.begin(), ups.end(), [&](ElementId a, ElementId b) { return topo_pos[a] < topo_pos[b]; });
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementId y : ups) {
      if (!seen[y]) {
        p.above_[x].push_back(y);
        p.below_[y].push_back(x);
        for (ElementId z = 0; z < n; ++z)
          if (p.less_[y * n + z]) seen[z] = 1;
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    std::sort(p.above_[x].begin(), p.above_[x].end());
    std::sort(p.below_[x].begin(), p.below_[x].end());
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y : p.above_[x]) p.covers_.emplace_back(x, y);
  std::sort(p.covers_.begin(), p.covers_.end());

  // Longest and shortest cover-path heights to a maximal element, walked in
  // reverse topological order (all successors are processed first).
  std::vector<int> up_max(n, 0), up_min(n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    ElementId x = *it;
    if (p.above_[x].empty()) continue;
    int mx = 0, mn = INT32_MAX;
    for (ElementId y : p.above_[x]) {
      mx = std::max(mx, up_max[y]);
      mn = std::min(mn, up_min[y]);
    }
    up_max[x] = mx + 1;
    up_min[x] = mn + 1;
  }
  p.rank_ = -1;
  p.min_chain_ = n == 0 ? -1 : INT32_MAX;
  for (ElementId x = 0; x < n; ++x) {
    p.rank_ = std::max(p.rank_, up_max[x]);
    if (p.is_minimal(x)) p.min_chain_ = std::min(p.min_chain_, up_min[x]);
  }
  return p;
}

std::optional<ElementId> Poset::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

ElementId Poset::id_of(std::string_view name) const {
  auto id = find(name);
  if (!id) throw UnknownElement("unknown element '" + std::string(name) + "'");
  return *id;
}

bool Poset::leq(ElementId x, ElementId y) const { return x == y || less_[x * size() + y] != 0; }

bool Poset::less(ElementId x, ElementId y) const { return less_[x * size() + y] != 0; }

bool Poset::leq(std::string_view x, std::string_view y) const { return leq(id_of(x), id_of(y)); }

bool Poset::covers(ElementId x, ElementId y) const {
  const auto& ups = above_[x];
  return std::binary_search(ups.begin(), ups.end(), y);
}

std::span<const ElementId> Poset::covers_above(ElementId x) const { return above_[x]; }

std::span<const ElementId> Poset::covers_below(ElementId x) const { return below_[x]; }

std::vector<ElementId> Poset::minimal_elements() const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size(); ++x)
    if (is_minimal(x)) out.push_back(x);
  return out;
}

std::vector<ElementId> Poset::maximal_elements() const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size(); ++x)
    if (is_maximal(x)) out.push_back(x);
  return out;
}

std::vector<ElementId> Poset::down_set(ElementId p) const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size(); ++x)
    if (leq(x, p)) out.push_back(x);
  return out;
}

bool Poset::is_connected() const {
  if (size() <= 1) return true;
  std::vector<std::uint8_t> seen(size(), 0);
  std::vector<ElementId> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    ElementId v = queue.back();
    queue.pop_back();
    auto visit = [&](ElementId w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    };
    for (ElementId w : above_[v]) visit(w);
    for (ElementId w : below_[v]) visit(w);
  }
  return reached == size();
}

std::vector<ElementId> Poset::linear_extension() const {
  // Sorting by |down-set| is a linear extension: x < y implies the down-set
  // of x is strictly contained in that of y. Declaration order breaks ties.
  const std::size_t n = size();
  std::vector<std::size_t> weight(n, 0);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (less(y, x)) ++weight[x];
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return weight[a] < weight[b]; });
  return order;
}

ExtendedPoset extend(const Poset& base) {
  auto unique_name = [&](std::string candidate) {
    while (base.find(candidate)) candidate.insert(candidate.begin(), '_');
    return candidate;
  };
  const std::string bottom = unique_name("-inf");
  const std::string top = unique_name("+inf");

  std::vector<std::string> names = base.elements();
  names.push_back(bottom);
  names.push_back(top);

  std::vector<std::pair<std::string, std::string>> rels;
  for (const auto& [x, y] : base.cover_pairs()) rels.emplace_back(base.name(x), base.name(y));
  for (ElementId m : base.minimal_elements()) rels.emplace_back(bottom, base.name(m));
  for (ElementId m : base.maximal_elements()) rels.emplace_back(base.name(m), top);
  if (base.empty()) rels.emplace_back(bottom, top);

  ExtendedPoset ext;
  ext.poset = Poset::build(std::move(names), rels);
  ext.base_size = base.size();
  return ext;
}

}  // namespace hibi
