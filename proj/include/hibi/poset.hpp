#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hibi {

using ElementId = std::uint32_t;

/// A finite poset over named elements.
///
/// Construction closes the input relations transitively, rejects cycles and
/// reduces to the irredundant cover set (the Hasse diagram). Element
/// declaration order is preserved and acts as the tie-breaker for every
/// search in the library, so identical inputs always produce identical
/// outputs. Instances are immutable after construction and safe to share
/// across threads.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from strict relations x < y. The relation list may be
  /// any set of valid inequalities, not only covers.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& relations);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(ElementId x) const { return names_[x]; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Throws UnknownElement.
  ElementId id_of(std::string_view name) const;

  bool leq(ElementId x, ElementId y) const;
  bool less(ElementId x, ElementId y) const;
  /// Named lookup variant; throws UnknownElement.
  bool leq(std::string_view x, std::string_view y) const;
  /// x is covered by y.
  bool covers(ElementId x, ElementId y) const;

  const std::vector<std::pair<ElementId, ElementId>>& cover_pairs() const { return covers_; }
  std::span<const ElementId> covers_above(ElementId x) const;
  std::span<const ElementId> covers_below(ElementId x) const;

  bool is_minimal(ElementId x) const { return below_[x].empty(); }
  bool is_maximal(ElementId x) const { return above_[x].empty(); }
  std::vector<ElementId> minimal_elements() const;
  std::vector<ElementId> maximal_elements() const;

  /// {q : q <= p}, ascending ids.
  std::vector<ElementId> down_set(ElementId p) const;

  /// Length of the longest chain; -1 for the empty poset.
  int rank() const { return rank_; }
  /// Length of the shortest maximal chain; -1 for the empty poset.
  int min_maximal_chain() const { return min_chain_; }
  /// True iff all maximal chains have the same length; equivalently the
  /// Hibi ring of the poset is Gorenstein.
  bool is_pure() const { return rank_ == min_chain_; }

  /// Connectivity of the Hasse diagram viewed as an undirected graph.
  bool is_connected() const;

  /// Element ids in a deterministic linear extension of the order.
  std::vector<ElementId> linear_extension() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.covers_ == b.covers_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> ids_;
  std::vector<std::uint8_t> less_;  // n*n row-major strict comparability
  std::vector<std::pair<ElementId, ElementId>> covers_;
  std::vector<std::vector<ElementId>> above_;
  std::vector<std::vector<ElementId>> below_;
  int rank_ = -1;
  int min_chain_ = -1;
};

/// P with a bottom below every minimal element and a top above every maximal
/// one. Base elements keep their ids; bottom and top are appended, so the
/// path and level machinery applies to the extension unchanged.
struct ExtendedPoset {
  Poset poset;
  std::size_t base_size = 0;

  ElementId bottom() const { return static_cast<ElementId>(base_size); }
  ElementId top() const { return static_cast<ElementId>(base_size + 1); }
};

ExtendedPoset extend(const Poset& base);

}  // namespace hibi
