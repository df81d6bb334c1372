#include "invbruhat/elshell.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "invbruhat/incitti.hpp"

namespace invbruhat {

bool label_less(RiseLabel a, RiseLabel b, LabelOrder order) {
  return order == LabelOrder::standard_lex ? a < b : b < a;
}

std::string to_string(ElStatus status) {
  switch (status) {
    case ElStatus::el_labelling: return "el";
    case ElStatus::not_el_labelling: return "not-el";
    case ElStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

std::string to_string(EscapeKind kind) { return kind == EscapeKind::increasing ? "increasing" : "decreasing"; }

Lemma21Result lemma21_check(const Permutation& p, const Permutation& q) {
  for (const Permutation* x : {&p, &q}) {
    if (!is_involution(*x) || fixed_point_count(*x) != 0) {
      throw Error(x->word() + " is not a fixed-point-free involution");
    }
  }
  if (p == q) throw Error("lemma21_check needs p < q");
  Lemma21Result result;
  result.chain = decreasing_chain(p, q);
  const auto& elements = result.chain.elements;
  result.holds = std::all_of(elements.begin() + 1, elements.end() - 1,
                             [](const Permutation& x) { return fixed_point_count(x) == 0; });
  return result;
}

namespace {

using Word = std::vector<RiseLabel>;

bool word_less(const Word& a, const Word& b, LabelOrder order) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [order](RiseLabel x, RiseLabel y) { return label_less(x, y, order); });
}

/// Chain statistics for all intervals with a fixed top element.
class IntervalScan {
 public:
  IntervalScan(const PosetView& view, std::size_t top, LabelOrder order)
      : view_(view),
        top_(top),
        order_(order),
        increasing_from_edge_(view.edges().size(), kUnknown),
        min_word_(view.size()),
        min_word_count_(view.size(), kUnknown) {}

  /// Increasing chains x -> top.
  std::uint64_t increasing_chains(std::size_t x) {
    if (x == top_) return 1;
    std::uint64_t total = 0;
    for (std::size_t e : view_.upper_covers(x)) {
      if (inside(view_.edges()[e].upper)) total += increasing_after(e);
    }
    return total;
  }

  /// Label word of the unique increasing chain, assuming there is one.
  Word increasing_word(std::size_t x) {
    Word word;
    std::optional<std::size_t> previous;
    while (x != top_) {
      for (std::size_t e : view_.upper_covers(x)) {
        if (!inside(view_.edges()[e].upper)) continue;
        if (previous && label_less(label(e), label(*previous), order_)) continue;
        if (increasing_after(e) == 0) continue;
        word.push_back(label(e));
        previous = e;
        x = view_.edges()[e].upper;
        break;
      }
    }
    return word;
  }

  const Word& min_word(std::size_t x) {
    compute_min(x);
    return min_word_[x];
  }

  /// Number of chains x -> top whose label word equals min_word(x).
  std::uint64_t min_word_count(std::size_t x) {
    compute_min(x);
    return min_word_count_[x];
  }

 private:
  static constexpr std::uint64_t kUnknown = ~std::uint64_t{0};

  bool inside(std::size_t z) const { return view_.leq(z, top_); }
  RiseLabel label(std::size_t e) const { return *view_.edges()[e].label; }

  // Increasing chains from the upper end of e to the top whose first label
  // is not below label(e).
  std::uint64_t increasing_after(std::size_t e) {
    auto& memo = increasing_from_edge_[e];
    if (memo != kUnknown) return memo;
    const std::size_t z = view_.edges()[e].upper;
    std::uint64_t total = 0;
    if (z == top_) {
      total = 1;
    } else {
      for (std::size_t f : view_.upper_covers(z)) {
        if (!inside(view_.edges()[f].upper)) continue;
        if (label_less(label(f), label(e), order_)) continue;
        total += increasing_after(f);
      }
    }
    return memo = total;
  }

  void compute_min(std::size_t x) {
    if (min_word_count_[x] != kUnknown) return;
    if (x == top_) {
      min_word_count_[x] = 1;
      return;
    }
    std::optional<Word> best;
    std::uint64_t count = 0;
    for (std::size_t e : view_.upper_covers(x)) {
      const std::size_t z = view_.edges()[e].upper;
      if (!inside(z)) continue;
      compute_min(z);
      Word candidate{label(e)};
      candidate.insert(candidate.end(), min_word_[z].begin(), min_word_[z].end());
      if (!best || word_less(candidate, *best, order_)) {
        best = std::move(candidate);
        count = min_word_count_[z];
      } else if (!word_less(*best, candidate, order_)) {
        count += min_word_count_[z];
      }
    }
    min_word_[x] = best ? std::move(*best) : Word{};
    min_word_count_[x] = count;
  }

  const PosetView& view_;
  std::size_t top_;
  LabelOrder order_;
  std::vector<std::uint64_t> increasing_from_edge_;
  std::vector<Word> min_word_;
  std::vector<std::uint64_t> min_word_count_;
};

}  // namespace

ElReport el_check(const PosetView& view, LabelOrder order) {
  if (!view.bounded()) throw Error("EL check needs a bounded poset");
  if (!is_graded_bruteforce(view).graded) throw Error("EL check needs a graded poset");

  ElReport report;
  if (!view.fully_labelled()) {
    report.status = ElStatus::not_applicable;
    report.note = "some covers carry no label";
    return report;
  }

  for (std::size_t y = 0; y < view.size(); ++y) {
    IntervalScan scan(view, y, order);
    for (std::size_t x = 0; x < view.size(); ++x) {
      if (!view.less(x, y)) continue;
      ++report.intervals_checked;
      const std::uint64_t increasing = scan.increasing_chains(x);
      std::string reason;
      if (increasing != 1) {
        reason = std::to_string(increasing) + " increasing chains";
      } else if (scan.increasing_word(x) != scan.min_word(x) || scan.min_word_count(x) != 1) {
        reason = "increasing chain is not the strict lexicographic minimum";
      }
      if (!reason.empty()) report.violations.push_back({view.element(x), view.element(y), std::move(reason)});
    }
  }
  report.status = report.violations.empty() ? ElStatus::el_labelling : ElStatus::not_el_labelling;
  return report;
}

PosetView labelled_class_view(const FixedPointSpec& spec) {
  PosetView view = class_view(spec);
  for (std::size_t e = 0; e < view.edges().size(); ++e) {
    const auto& edge = view.edges()[e];
    if (auto label = cover_label(view.element(edge.lower), view.element(edge.upper))) view.set_label(e, *label);
  }
  return view;
}

std::optional<EscapingInterval> find_escaping_interval(const FixedPointSpec& spec, std::optional<EscapeKind> kind) {
  if (spec.counts() == std::vector<int>{0}) throw Error("A = {0} is excluded: its decreasing chains never escape");
  if (spec.is_identity_only()) throw Error("A = {n} is excluded: the class has one element");
  if (spec.is_all_involutions()) throw Error("the class is all of I_n; nothing can escape");

  if (!kind) {
    if (auto found = find_escaping_interval(spec, EscapeKind::increasing)) return found;
    return find_escaping_interval(spec, EscapeKind::decreasing);
  }

  const auto members = enumerate_class(spec);
  std::vector<int> ranks;
  for (const auto& p : members) ranks.push_back(rank_in_In(p));
  for (std::size_t s = 0; s < members.size(); ++s) {
    for (std::size_t t = 0; t < members.size(); ++t) {
      if (ranks[t] != ranks[s] + 2 || !bruhat_leq(members[s], members[t])) continue;
      const Chain chain = *kind == EscapeKind::increasing ? increasing_chain(members[s], members[t])
                                                          : decreasing_chain(members[s], members[t]);
      if (!spec.admits(chain.elements[1])) {
        return EscapingInterval{members[s], members[t], chain.elements[1], *kind};
      }
    }
  }
  return std::nullopt;
}

}  // namespace invbruhat
