#include "invbruhat/bruhat.hpp"

#include <algorithm>

namespace invbruhat {

DotTable::DotTable(const Permutation& p) : n_(p.size()), counts_(static_cast<std::size_t>(n_ * n_), 0) {
  // Row k is row k-1 plus the indicator p(k) >= l.
  for (int k = 1; k <= n_; ++k) {
    for (int l = 1; l <= n_; ++l) {
      const int previous = k > 1 ? (*this)(k - 1, l) : 0;
      counts_[static_cast<std::size_t>((k - 1) * n_ + (l - 1))] =
          static_cast<std::uint8_t>(previous + (p(k) >= l ? 1 : 0));
    }
  }
}

bool DotTable::dominated_by(const DotTable& other) const {
  if (n_ != other.n_) throw Error("dot table size mismatch");
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    if (counts_[e] > other.counts_[e]) return false;
  }
  return true;
}

DotTable dot_table(const Permutation& p) { return DotTable(p); }

bool bruhat_leq(const Permutation& p, const Permutation& q) {
  check_same_size(p, q);
  const int n = p.size();
  // Running column counts for rows 1..k, compared row by row.
  std::array<int, kMaxN + 2> p_count{};
  std::array<int, kMaxN + 2> q_count{};
  for (int k = 1; k <= n; ++k) {
    ++p_count[static_cast<std::size_t>(p(k))];
    ++q_count[static_cast<std::size_t>(q(k))];
    int p_tail = 0;
    int q_tail = 0;
    for (int l = n; l >= 1; --l) {
      p_tail += p_count[static_cast<std::size_t>(l)];
      q_tail += q_count[static_cast<std::size_t>(l)];
      if (p_tail > q_tail) return false;
    }
  }
  return true;
}

std::vector<Permutation> interval(const Permutation& p, const Permutation& q,
                                  std::span<const Permutation> universe) {
  if (!bruhat_leq(p, q)) throw Error("interval endpoints are not comparable: " + p.word() + " > " + q.word());
  std::vector<Permutation> out;
  for (const auto& z : universe) {
    check_same_size(p, z);
    if (bruhat_leq(p, z) && bruhat_leq(z, q)) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PosetView PosetView::from_relation(std::vector<Permutation> elements, const Relation& less) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  PosetView view;
  const std::size_t size = elements.size();
  view.elements_ = std::move(elements);
  view.above_.assign(size, boost::dynamic_bitset<>(size));
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      if (x != y && less(view.elements_[x], view.elements_[y])) view.above_[x].set(y);
    }
  }

  // y covers x iff y is above x but above no other element above x.
  view.up_edges_.assign(size, {});
  view.down_edges_.assign(size, {});
  for (std::size_t x = 0; x < size; ++x) {
    boost::dynamic_bitset<> shadowed(size);
    for (auto z = view.above_[x].find_first(); z != boost::dynamic_bitset<>::npos; z = view.above_[x].find_next(z)) {
      shadowed |= view.above_[z];
    }
    const boost::dynamic_bitset<> covers = view.above_[x] - shadowed;
    for (auto y = covers.find_first(); y != boost::dynamic_bitset<>::npos; y = covers.find_next(y)) {
      view.edges_.push_back(CoverEdge{x, y, std::nullopt});
    }
  }
  for (std::size_t e = 0; e < view.edges_.size(); ++e) {
    view.up_edges_[view.edges_[e].lower].push_back(e);
    view.down_edges_[view.edges_[e].upper].push_back(e);
  }
  return view;
}

std::optional<std::size_t> PosetView::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> PosetView::edge_between(std::size_t lower, std::size_t upper) const {
  for (std::size_t e : up_edges_[lower]) {
    if (edges_[e].upper == upper) return e;
  }
  return std::nullopt;
}

bool PosetView::fully_labelled() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const CoverEdge& e) { return e.label.has_value(); });
}

std::vector<std::size_t> PosetView::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (down_edges_[x].empty()) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> PosetView::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (up_edges_[x].empty()) out.push_back(x);
  }
  return out;
}

std::optional<std::size_t> PosetView::bottom() const {
  auto minimal = minimal_elements();
  if (minimal.size() != 1) return std::nullopt;
  return minimal.front();
}

std::optional<std::size_t> PosetView::top() const {
  auto maximal = maximal_elements();
  if (maximal.size() != 1) return std::nullopt;
  return maximal.front();
}

std::vector<std::size_t> PosetView::closed_interval(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  if (!leq(x, y)) return out;
  out.push_back(x);
  for (auto z = above_[x].find_first(); z != boost::dynamic_bitset<>::npos; z = above_[x].find_next(z)) {
    if (leq(z, y)) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PosetView poset_view(std::vector<Permutation> universe) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  for (const auto& p : universe) check_same_size(universe.front(), p);

  std::vector<DotTable> tables;
  tables.reserve(universe.size());
  for (const auto& p : universe) tables.emplace_back(p);
  auto less = [&](const Permutation& a, const Permutation& b) {
    // Both are members of the sorted universe; look up their tables.
    const auto ia = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), a) - universe.begin());
    const auto ib = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), b) - universe.begin());
    return a != b && tables[ia].dominated_by(tables[ib]);
  };
  return PosetView::from_relation(universe, less);
}

}  // namespace invbruhat
