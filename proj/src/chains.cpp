#include "invbruhat/chains.hpp"

#include <algorithm>
#include <functional>

#include "invbruhat/bruhat.hpp"
#include "invbruhat/incitti.hpp"

namespace invbruhat {

namespace {

enum class Greed { smallest_label, largest_label };

Chain greedy_chain(const Permutation& p, const Permutation& q, Greed greed) {
  Chain chain;
  chain.elements.push_back(p);
  Permutation current = p;
  while (current != q) {
    std::optional<LabelledCover> chosen;
    for (auto& cover : covers(current)) {
      if (!bruhat_leq(cover.target, q)) continue;
      const bool better = !chosen || (greed == Greed::smallest_label ? cover.label < chosen->label
                                                                     : cover.label > chosen->label);
      if (better) chosen = cover;
    }
    // Every element of [p, q] below q has an upper cover inside the interval.
    if (!chosen) throw std::logic_error("greedy chain stalled at " + current.word());
    chain.labels.push_back(chosen->label);
    chain.elements.push_back(chosen->target);
    current = chosen->target;
  }
  return chain;
}

Chain unique_chain_by_search(const Permutation& p, const Permutation& q,
                             const std::function<bool(const Chain&)>& accept, const char* what) {
  std::vector<Chain> matches;
  for (auto& chain : all_saturated_chains(p, q)) {
    if (accept(chain)) matches.push_back(std::move(chain));
  }
  if (matches.size() != 1) {
    throw std::logic_error(std::string("expected exactly one ") + what + " chain from " + p.word() + " to " +
                           q.word() + ", found " + std::to_string(matches.size()));
  }
  return matches.front();
}

void extend_chains(const Permutation& q, Chain& prefix, std::vector<Chain>& out, std::size_t limit) {
  const Permutation& current = prefix.elements.back();
  if (current == q) {
    if (out.size() >= limit) {
      throw ChainLimitExceeded("more than " + std::to_string(limit) + " saturated chains between " +
                               prefix.bottom().word() + " and " + q.word());
    }
    out.push_back(prefix);
    return;
  }
  for (auto& cover : covers(current)) {
    if (!bruhat_leq(cover.target, q)) continue;
    prefix.elements.push_back(cover.target);
    prefix.labels.push_back(cover.label);
    extend_chains(q, prefix, out, limit);
    prefix.elements.pop_back();
    prefix.labels.pop_back();
  }
}

}  // namespace

void require_involution_interval(const Permutation& p, const Permutation& q) {
  check_same_size(p, q);
  if (!is_involution(p)) throw Error(p.word() + " is not an involution");
  if (!is_involution(q)) throw Error(q.word() + " is not an involution");
  if (!bruhat_leq(p, q)) throw Error(p.word() + " is not below " + q.word() + " in Bruhat order");
}

int di(const Permutation& p, const Permutation& q) {
  check_same_size(p, q);
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) != q(i)) return i;
  }
  throw Error("di is undefined for equal permutations");
}

bool is_weakly_increasing(const Chain& chain) {
  return std::is_sorted(chain.labels.begin(), chain.labels.end());
}

bool is_strictly_decreasing(const Chain& chain) {
  return std::adjacent_find(chain.labels.begin(), chain.labels.end(), std::less_equal<>{}) == chain.labels.end();
}

bool is_weakly_decreasing(const Chain& chain) {
  return std::is_sorted(chain.labels.begin(), chain.labels.end(), std::greater<>{});
}

Chain increasing_chain(const Permutation& p, const Permutation& q) {
  require_involution_interval(p, q);
  Chain chain = greedy_chain(p, q, Greed::smallest_label);
  if (is_weakly_increasing(chain)) return chain;
  return unique_chain_by_search(p, q, is_weakly_increasing, "increasing");
}

Chain decreasing_chain(const Permutation& p, const Permutation& q) {
  require_involution_interval(p, q);
  Chain chain = greedy_chain(p, q, Greed::largest_label);
  if (is_strictly_decreasing(chain)) return chain;
  return unique_chain_by_search(p, q, is_strictly_decreasing, "decreasing");
}

std::vector<Chain> all_saturated_chains(const Permutation& p, const Permutation& q, std::size_t limit) {
  require_involution_interval(p, q);
  std::vector<Chain> out;
  Chain prefix;
  prefix.elements.push_back(p);
  extend_chains(q, prefix, out, limit);
  return out;
}

}  // namespace invbruhat
