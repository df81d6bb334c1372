#pragma once

// Conjugation-invariant classes F_n^A of involutions (involutions whose
// number of fixed points lies in A), their induced Bruhat order,
// gradedness, rank functions, extremal elements, and the explicit
// non-gradedness witnesses.

#include <optional>
#include <string>
#include <vector>

#include "invbruhat/bruhat.hpp"
#include "invbruhat/label.hpp"
#include "invbruhat/permutation.hpp"

namespace invbruhat {

/// A validated pair (n, A): A nonempty, A within {0..n}, every member of A
/// congruent to n mod 2. Members are kept sorted and unique.
class FixedPointSpec {
 public:
  static FixedPointSpec make(int n, std::vector<int> counts);

  /// F_n^{<=a}: counts a, a-2, ... down to 0 or 1.
  static FixedPointSpec at_most(int n, int a);
  /// F_n^{>=a}: counts a, a+2, ... up to n.
  static FixedPointSpec at_least(int n, int a);
  /// F_n^{a1:a2} = F_n^{>=a1} intersected with F_n^{<=a2}; requires a1 < a2.
  static FixedPointSpec between(int n, int a1, int a2);
  /// Every parity-valid count, i.e. all of I_n.
  static FixedPointSpec all_involutions(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<int>& counts() const { return counts_; }
  [[nodiscard]] bool contains(int fixed_points) const;
  /// p is an involution of S_n with an admissible number of fixed points.
  [[nodiscard]] bool admits(const Permutation& p) const;

  [[nodiscard]] int a_min() const { return counts_.front(); }
  [[nodiscard]] int a_max() const { return counts_.back(); }
  /// max(A - {n}); nullopt when A = {n}.
  [[nodiscard]] std::optional<int> a_tilde() const;
  [[nodiscard]] std::vector<int> without_n() const;
  [[nodiscard]] bool contains_identity() const { return contains(n_); }
  [[nodiscard]] bool is_identity_only() const { return counts_.size() == 1 && counts_.front() == n_; }
  [[nodiscard]] bool is_all_involutions() const;

  /// A - {n} written as {a1, a1+2, ..., a2}, when it has that shape.
  struct Run {
    int a1;
    int a2;
  };
  [[nodiscard]] std::optional<Run> run() const;

  /// "F_6^{0,2}".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const FixedPointSpec&, const FixedPointSpec&) = default;

 private:
  FixedPointSpec(int n, std::vector<int> counts) : n_(n), counts_(std::move(counts)) {}
  int n_;
  std::vector<int> counts_;
};

inline FixedPointSpec make_spec(int n, std::vector<int> counts) {
  return FixedPointSpec::make(n, std::move(counts));
}

/// Every parity-valid nonempty A for this n, ordered lexicographically.
std::vector<FixedPointSpec> all_specs(int n);

/// Members of F_n^A, lexicographic.
std::vector<Permutation> enumerate_class(const FixedPointSpec& spec);

/// Hasse diagram of F_n^A under the induced Bruhat order.
PosetView class_view(const FixedPointSpec& spec);

struct Grading {
  bool graded = false;
  /// Rank of each element (indexed like the view) when graded.
  std::optional<std::vector<int>> ranks;
  /// Length of a longest chain.
  int height = 0;
};

/// Gradedness straight from the definition: every maximal chain has the same
/// length. Computes, per element, the shortest and longest saturated chains
/// up from a minimal element.
Grading is_graded_bruteforce(const PosetView& view);

/// The closed-form criterion on A.
bool is_graded_theorem1(const FixedPointSpec& spec);

/// (inv + exc)/2, the rank in I_n. Throws for non-involutions.
int rank_in_In(const Permutation& p);

/// Rank of p in a graded F_n^A:
///   (inv + exc - n + max(A - {n}))/2, plus 1 when n is in A,
/// except that the identity (present when n is in A) is the minimum and has
/// rank 0. For A = {n} the single element has rank 0.
/// Throws Error if p is not in the class or the class is not graded.
int rank_value(const Permutation& p, const FixedPointSpec& spec);

/// Rank of the graded poset F_n^A, taken as the rank of its maximum.
int class_rank(const FixedPointSpec& spec);

/// The closed form for the rank of F_n^A written in terms of min A alone,
/// ((n-a)/2 (n+a-1) - n + max(A - {n}))/2 (+1 if n in A). It omits
/// exc of the maximum and is not used for computation; kept so reports can
/// show the discrepancy. nullopt for A = {n}.
std::optional<double> displayed_rank_expression(const FixedPointSpec& spec);

/// Unique maximum of F_n^A: n(n-1)...(b+1)(c+1)(c+2)...b c(c-1)...1 where
/// c = (n-a)/2, b = (n+a)/2, a = min A.
Permutation top_element(const FixedPointSpec& spec);

/// Minimal elements of F_n^A: max A fixed points plus (n - max A)/2 disjoint
/// adjacent transpositions. Lexicographic.
std::vector<Permutation> minimal_elements(const FixedPointSpec& spec);

/// For p < q in the class: the element covering p on the increasing I_n
/// chain, or the element covered by q on the decreasing I_n chain, lies in
/// the class.
bool chain_entry_property(const Permutation& p, const Permutation& q, const FixedPointSpec& spec);

/// True iff q covers p in the poset induced on the class.
bool is_induced_cover(const Permutation& p, const Permutation& q, const std::vector<Permutation>& class_members);

/// A chain in an induced poset; labels[t] is the I_n label of the step
/// elements[t] < elements[t+1] when that step is also a cover of I_n.
struct WitnessChain {
  std::vector<Permutation> elements;
  std::vector<std::optional<RiseLabel>> labels;

  [[nodiscard]] std::size_t length() const { return elements.size() - 1; }
};

/// Two chains between the same endpoints in a class, of different lengths,
/// each step a cover of the induced poset.
struct Witness {
  FixedPointSpec spec;
  Permutation bottom;
  Permutation top;
  WitnessChain long_chain;
  WitnessChain short_chain;
  /// Every emitted step was re-checked as an induced cover.
  bool verified = false;
};

/// Non-gradedness witness in F_n^{i} built from the n = 6, i = 2 core
/// (124365 < 143265 < 423165 < 426153 against 124365 < 216453 < 426153),
/// padded by fixed points and adjacent transpositions.
/// Requires 2 <= i <= n-4 and i = n mod 2.
Witness prop19_witness(int n, int i);

/// Non-gradedness witness in F_n^{i-2, i+2m} built from the k = 2m+4 core
/// 12...(k-2)k(k-1) to k23...(k-1)1: a long chain of k-2 fe moves against a
/// two-step chain through a fixed-point-free involution.
/// Requires m >= 1, i >= 2, i = n mod 2, i + 2m + 2 <= n.
Witness prop20_witness(int n, int i, int m);

}  // namespace invbruhat
