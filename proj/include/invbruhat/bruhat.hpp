#pragma once

// Bruhat order on S_n via the dot criterion, and explicit finite posets
// (Hasse diagrams) induced on arbitrary sets of permutations.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "invbruhat/label.hpp"
#include "invbruhat/permutation.hpp"

namespace invbruhat {

/// Entry (k, l) counts {i <= k : p(i) >= l}, for 1 <= k, l <= n.
class DotTable {
 public:
  explicit DotTable(const Permutation& p);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int operator()(int k, int l) const {
    return counts_[static_cast<std::size_t>((k - 1) * n_ + (l - 1))];
  }

  /// Entrywise comparison; equivalent to Bruhat comparison of the sources.
  [[nodiscard]] bool dominated_by(const DotTable& other) const;

 private:
  int n_;
  std::vector<std::uint8_t> counts_;
};

DotTable dot_table(const Permutation& p);

/// p <= q in the Bruhat order of S_n. Throws on size mismatch.
bool bruhat_leq(const Permutation& p, const Permutation& q);

/// Members z of `universe` with p <= z <= q, sorted. Throws unless p <= q.
std::vector<Permutation> interval(const Permutation& p, const Permutation& q,
                                  std::span<const Permutation> universe);

struct CoverEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<RiseLabel> label;
};

/// A finite poset on a sorted set of permutations together with its
/// covering relation. Element indices refer to positions in elements().
class PosetView {
 public:
  using Relation = std::function<bool(const Permutation&, const Permutation&)>;

  /// Builds the poset from a strict-order predicate; `less` must be a strict
  /// partial order on `elements`. Duplicates are removed.
  static PosetView from_relation(std::vector<Permutation> elements, const Relation& less);

  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::vector<Permutation>& elements() const { return elements_; }
  [[nodiscard]] const Permutation& element(std::size_t i) const { return elements_[i]; }
  [[nodiscard]] std::optional<std::size_t> index_of(const Permutation& p) const;

  [[nodiscard]] bool less(std::size_t x, std::size_t y) const { return above_[x].test(y); }
  [[nodiscard]] bool leq(std::size_t x, std::size_t y) const { return x == y || less(x, y); }

  /// Strict up-set of x as a bitset over element indices.
  [[nodiscard]] const boost::dynamic_bitset<>& strictly_above(std::size_t x) const { return above_[x]; }

  /// Edges sorted by (lower, upper).
  [[nodiscard]] const std::vector<CoverEdge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_edges_[x]; }
  [[nodiscard]] const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_edges_[x]; }
  [[nodiscard]] std::optional<std::size_t> edge_between(std::size_t lower, std::size_t upper) const;

  void set_label(std::size_t edge, RiseLabel label) { edges_[edge].label = label; }
  [[nodiscard]] bool fully_labelled() const;

  [[nodiscard]] std::vector<std::size_t> minimal_elements() const;
  [[nodiscard]] std::vector<std::size_t> maximal_elements() const;
  [[nodiscard]] std::optional<std::size_t> bottom() const;
  [[nodiscard]] std::optional<std::size_t> top() const;
  [[nodiscard]] bool bounded() const { return bottom() && top(); }

  /// Indices z with x <= z <= y, ascending.
  [[nodiscard]] std::vector<std::size_t> closed_interval(std::size_t x, std::size_t y) const;

 private:
  std::vector<Permutation> elements_;
  std::vector<boost::dynamic_bitset<>> above_;
  std::vector<CoverEdge> edges_;
  std::vector<std::vector<std::size_t>> up_edges_;
  std::vector<std::vector<std::size_t>> down_edges_;
};

/// Hasse diagram of the Bruhat order restricted to `universe`.
PosetView poset_view(std::vector<Permutation> universe);

}  // namespace invbruhat
