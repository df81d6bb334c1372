#pragma once

// Saturated chains in I_n: the greedy increasing and decreasing chains and
// an exhaustive enumerator used for uniqueness checks.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "invbruhat/label.hpp"
#include "invbruhat/permutation.hpp"

namespace invbruhat {

/// Saturated chain in I_n, bottom to top. labels[t] labels the cover
/// elements[t] < elements[t + 1].
struct Chain {
  std::vector<Permutation> elements;
  std::vector<RiseLabel> labels;

  [[nodiscard]] std::size_t length() const { return labels.size(); }
  [[nodiscard]] const Permutation& bottom() const { return elements.front(); }
  [[nodiscard]] const Permutation& top() const { return elements.back(); }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// all_saturated_chains was asked for more chains than its limit allows.
class ChainLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultChainLimit = 10'000;

/// Least index where the one-line words differ. Throws if p == q.
int di(const Permutation& p, const Permutation& q);

/// Labels weakly increase along the chain.
bool is_weakly_increasing(const Chain& chain);
/// Labels strictly decrease along the chain.
bool is_strictly_decreasing(const Chain& chain);
bool is_weakly_decreasing(const Chain& chain);

/// The unique p-q chain in I_n with weakly increasing labels.
Chain increasing_chain(const Permutation& p, const Permutation& q);

/// The unique p-q chain in I_n with strictly decreasing labels.
Chain decreasing_chain(const Permutation& p, const Permutation& q);

/// Every saturated p-q chain in I_n, in lexicographic order of label words.
/// Throws ChainLimitExceeded rather than truncating.
std::vector<Chain> all_saturated_chains(const Permutation& p, const Permutation& q,
                                        std::size_t limit = kDefaultChainLimit);

/// Throws Error unless p and q are same-size involutions with p <= q.
void require_involution_interval(const Permutation& p, const Permutation& q);

}  // namespace invbruhat
