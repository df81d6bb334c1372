#include "invbruhat/fpclasses.hpp"

#include <algorithm>
#include <functional>

#include "invbruhat/chains.hpp"
#include "invbruhat/incitti.hpp"

namespace invbruhat {

// ---------------------------------------------------------------------------
// FixedPointSpec

FixedPointSpec FixedPointSpec::make(int n, std::vector<int> counts) {
  check_size(n);
  if (counts.empty()) throw Error("fixed-point set A must be nonempty");
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  for (int a : counts) {
    if (a < 0 || a > n) {
      throw Error("fixed-point count " + std::to_string(a) + " outside 0.." + std::to_string(n));
    }
    if ((a - n) % 2 != 0) {
      throw Error("fixed-point count " + std::to_string(a) + " has the wrong parity for n = " + std::to_string(n));
    }
  }
  return FixedPointSpec(n, std::move(counts));
}

FixedPointSpec FixedPointSpec::at_most(int n, int a) {
  std::vector<int> counts;
  for (int c = a; c >= 0; c -= 2) counts.push_back(c);
  return make(n, std::move(counts));
}

FixedPointSpec FixedPointSpec::at_least(int n, int a) {
  std::vector<int> counts;
  for (int c = a; c <= n; c += 2) counts.push_back(c);
  return make(n, std::move(counts));
}

FixedPointSpec FixedPointSpec::between(int n, int a1, int a2) {
  if (a2 <= a1) throw Error("interval class needs a1 < a2");
  std::vector<int> counts;
  for (int c = a1; c <= a2; c += 2) counts.push_back(c);
  if (counts.back() != a2) throw Error("a2 - a1 must be even");
  return make(n, std::move(counts));
}

FixedPointSpec FixedPointSpec::all_involutions(int n) { return at_least(n, n % 2); }

bool FixedPointSpec::contains(int fixed_points) const {
  return std::binary_search(counts_.begin(), counts_.end(), fixed_points);
}

bool FixedPointSpec::admits(const Permutation& p) const {
  return p.size() == n_ && is_involution(p) && contains(fixed_point_count(p));
}

std::vector<int> FixedPointSpec::without_n() const {
  std::vector<int> out;
  for (int a : counts_) {
    if (a != n_) out.push_back(a);
  }
  return out;
}

std::optional<int> FixedPointSpec::a_tilde() const {
  auto rest = without_n();
  if (rest.empty()) return std::nullopt;
  return rest.back();
}

bool FixedPointSpec::is_all_involutions() const { return counts_.size() == static_cast<std::size_t>(n_ / 2 + 1); }

std::optional<FixedPointSpec::Run> FixedPointSpec::run() const {
  auto rest = without_n();
  if (rest.empty()) return std::nullopt;
  for (std::size_t t = 1; t < rest.size(); ++t) {
    if (rest[t] != rest[t - 1] + 2) return std::nullopt;
  }
  return Run{rest.front(), rest.back()};
}

std::string FixedPointSpec::name() const {
  std::string out = "F_" + std::to_string(n_) + "^{";
  for (std::size_t t = 0; t < counts_.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(counts_[t]);
  }
  return out + "}";
}

std::vector<FixedPointSpec> all_specs(int n) {
  check_size(n);
  std::vector<int> values;
  for (int a = n % 2; a <= n; a += 2) values.push_back(a);
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << values.size()); ++mask) {
    std::vector<int> subset;
    for (std::size_t b = 0; b < values.size(); ++b) {
      if (mask & (1u << b)) subset.push_back(values[b]);
    }
    subsets.push_back(std::move(subset));
  }
  std::sort(subsets.begin(), subsets.end());
  std::vector<FixedPointSpec> out;
  for (auto& subset : subsets) out.push_back(FixedPointSpec::make(n, std::move(subset)));
  return out;
}

std::vector<Permutation> enumerate_class(const FixedPointSpec& spec) {
  std::vector<Permutation> out;
  for (auto& p : enumerate_involutions(spec.n())) {
    if (spec.contains(fixed_point_count(p))) out.push_back(p);
  }
  return out;
}

PosetView class_view(const FixedPointSpec& spec) { return poset_view(enumerate_class(spec)); }

// ---------------------------------------------------------------------------
// Gradedness and ranks

Grading is_graded_bruteforce(const PosetView& view) {
  const std::size_t size = view.size();
  constexpr int kUnset = -1;
  std::vector<int> shortest(size, kUnset);
  std::vector<int> longest(size, kUnset);

  // Chain lengths from any minimal element up to x, over lower covers.
  std::function<void(std::size_t)> visit = [&](std::size_t x) {
    if (shortest[x] != kUnset) return;
    const auto& below = view.lower_covers(x);
    if (below.empty()) {
      shortest[x] = longest[x] = 0;
      return;
    }
    int lo = 0;
    int hi = 0;
    bool first = true;
    for (std::size_t e : below) {
      const std::size_t z = view.edges()[e].lower;
      visit(z);
      lo = first ? shortest[z] + 1 : std::min(lo, shortest[z] + 1);
      hi = first ? longest[z] + 1 : std::max(hi, longest[z] + 1);
      first = false;
    }
    shortest[x] = lo;
    longest[x] = hi;
  };

  Grading result;
  for (std::size_t x = 0; x < size; ++x) visit(x);
  for (std::size_t x = 0; x < size; ++x) result.height = std::max(result.height, longest[x]);

  bool graded = true;
  std::optional<int> maximal_length;
  for (std::size_t x = 0; x < size && graded; ++x) {
    if (shortest[x] != longest[x]) graded = false;
    if (view.upper_covers(x).empty()) {
      if (maximal_length && *maximal_length != longest[x]) graded = false;
      maximal_length = longest[x];
    }
  }
  result.graded = graded;
  if (graded) result.ranks = longest;
  return result;
}

bool is_graded_theorem1(const FixedPointSpec& spec) {
  if (spec.without_n().empty()) return true;
  const auto run = spec.run();
  if (!run) return false;
  return run->a1 <= 1 || run->a2 == spec.n() - 2 || run->a2 - run->a1 >= 2;
}

int rank_in_In(const Permutation& p) {
  if (!is_involution(p)) throw Error(p.word() + " is not an involution");
  return (inversions(p) + exceedances(p)) / 2;
}

int rank_value(const Permutation& p, const FixedPointSpec& spec) {
  if (!spec.admits(p)) throw Error(p.word() + " is not a member of " + spec.name());
  if (!is_graded_theorem1(spec)) throw Error(spec.name() + " is not graded; it has no rank function");
  if (p.is_identity()) return 0;
  const int twice = inversions(p) + exceedances(p) - spec.n() + *spec.a_tilde();
  return twice / 2 + (spec.contains_identity() ? 1 : 0);
}

int class_rank(const FixedPointSpec& spec) { return rank_value(top_element(spec), spec); }

std::optional<double> displayed_rank_expression(const FixedPointSpec& spec) {
  const auto a_tilde = spec.a_tilde();
  if (!a_tilde) return std::nullopt;
  const int n = spec.n();
  const int a = spec.a_min();
  const int numerator = (n - a) / 2 * (n + a - 1) - n + *a_tilde;
  return numerator / 2.0 + (spec.contains_identity() ? 1.0 : 0.0);
}

// ---------------------------------------------------------------------------
// Extremal elements

Permutation top_element(const FixedPointSpec& spec) {
  const int n = spec.n();
  const int a = spec.a_min();
  const int low = (n - a) / 2;
  const int high = (n + a) / 2;
  std::vector<int> w;
  for (int v = n; v > high; --v) w.push_back(v);
  for (int v = low + 1; v <= high; ++v) w.push_back(v);
  for (int v = low; v >= 1; --v) w.push_back(v);
  return Permutation::from_window(w);
}

namespace {

void place_dominoes(std::vector<int>& w, int position, int remaining, std::vector<Permutation>& out) {
  const int n = static_cast<int>(w.size());
  if (remaining == 0) {
    out.push_back(Permutation::from_window(w));
    return;
  }
  for (int start = position; start + 1 <= n; ++start) {
    // Disjointness: [start, start+1] begins after the previous domino.
    std::swap(w[static_cast<std::size_t>(start - 1)], w[static_cast<std::size_t>(start)]);
    place_dominoes(w, start + 2, remaining - 1, out);
    std::swap(w[static_cast<std::size_t>(start - 1)], w[static_cast<std::size_t>(start)]);
  }
}

}  // namespace

std::vector<Permutation> minimal_elements(const FixedPointSpec& spec) {
  const int n = spec.n();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) w[static_cast<std::size_t>(x - 1)] = x;
  std::vector<Permutation> out;
  place_dominoes(w, 1, (n - spec.a_max()) / 2, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool chain_entry_property(const Permutation& p, const Permutation& q, const FixedPointSpec& spec) {
  if (!spec.admits(p) || !spec.admits(q)) throw Error("chain entry check needs both endpoints in " + spec.name());
  if (p == q) throw Error("chain entry check needs p < q");
  const Chain up = increasing_chain(p, q);
  const Chain down = decreasing_chain(p, q);
  const Permutation& above_bottom = up.elements[1];
  const Permutation& below_top = down.elements[down.elements.size() - 2];
  return spec.admits(above_bottom) || spec.admits(below_top);
}

bool is_induced_cover(const Permutation& p, const Permutation& q, const std::vector<Permutation>& class_members) {
  if (p == q || !bruhat_leq(p, q)) return false;
  return std::none_of(class_members.begin(), class_members.end(), [&](const Permutation& z) {
    return z != p && z != q && bruhat_leq(p, z) && bruhat_leq(z, q);
  });
}

// ---------------------------------------------------------------------------
// Non-gradedness witnesses

namespace {

/// Appends, after the core, `fixed` fixed points and then adjacent
/// transpositions up to n.
Permutation pad(const Permutation& core, int n, int fixed) {
  std::vector<int> w = core.window();
  int next = core.size() + 1;
  for (int t = 0; t < fixed; ++t, ++next) w.push_back(next);
  for (; next + 1 <= n; next += 2) {
    w.push_back(next + 1);
    w.push_back(next);
  }
  return Permutation::from_window(w);
}

WitnessChain padded_chain(const std::vector<Permutation>& core, int n, int fixed) {
  WitnessChain chain;
  for (const auto& p : core) chain.elements.push_back(pad(p, n, fixed));
  for (std::size_t t = 0; t + 1 < chain.elements.size(); ++t) {
    chain.labels.push_back(cover_label(chain.elements[t], chain.elements[t + 1]));
  }
  return chain;
}

bool verify_witness(const Witness& w) {
  const auto members = enumerate_class(w.spec);
  for (const WitnessChain* chain : {&w.long_chain, &w.short_chain}) {
    if (chain->elements.front() != w.bottom || chain->elements.back() != w.top) return false;
    for (const auto& p : chain->elements) {
      if (!w.spec.admits(p)) return false;
    }
    for (std::size_t t = 0; t + 1 < chain->elements.size(); ++t) {
      if (!is_induced_cover(chain->elements[t], chain->elements[t + 1], members)) return false;
    }
  }
  return w.long_chain.length() != w.short_chain.length();
}

std::vector<Permutation> parse_all(std::initializer_list<const char*> words) {
  std::vector<Permutation> out;
  for (const char* w : words) out.push_back(Permutation::parse(w));
  return out;
}

}  // namespace

Witness prop19_witness(int n, int i) {
  check_size(n);
  if (i < 2 || i > n - 4) throw Error("need 2 <= i <= n-4 (got i = " + std::to_string(i) + ", n = " + std::to_string(n) + ")");
  if ((n - i) % 2 != 0) throw Error("i must have the parity of n");

  const auto long_core = parse_all({"124365", "143265", "423165", "426153"});
  const auto short_core = parse_all({"124365", "216453", "426153"});
  const int extra_fixed = i - 2;

  Witness w{FixedPointSpec::make(n, {i}), pad(long_core.front(), n, extra_fixed),
            pad(long_core.back(), n, extra_fixed), padded_chain(long_core, n, extra_fixed),
            padded_chain(short_core, n, extra_fixed), false};
  w.verified = verify_witness(w);
  return w;
}

Witness prop20_witness(int n, int i, int m) {
  check_size(n);
  if (m < 1) throw Error("m must be positive");
  if (i < 2) throw Error("need i >= 2 so that i-2 is a valid fixed-point count");
  if ((n - i) % 2 != 0) throw Error("i must have the parity of n");
  const int k = 2 * m + 4;
  if (i + 2 * m + 2 > n) {
    throw Error("need i + 2m + 2 <= n (got i = " + std::to_string(i) + ", m = " + std::to_string(m) +
                ", n = " + std::to_string(n) + ")");
  }

  // bottom = 12...(k-2) k (k-1), top = k 2 3 ... (k-1) 1
  std::vector<int> bottom_word;
  for (int v = 1; v <= k - 2; ++v) bottom_word.push_back(v);
  bottom_word.push_back(k);
  bottom_word.push_back(k - 1);
  std::vector<int> top_word{k};
  for (int v = 2; v <= k - 1; ++v) top_word.push_back(v);
  top_word.push_back(1);
  const Permutation bottom = Permutation::from_window(bottom_word);
  const Permutation top = Permutation::from_window(top_word);

  // k-2 fe moves: (k-2,k-1), (k-3,k-2), ..., (1,2).
  std::vector<Permutation> long_core{bottom};
  for (int s = k - 2; s >= 1; --s) long_core.push_back(ct(long_core.back(), RiseLabel{s, s + 1}));

  // (k-2)/2 ff moves (1,2), (3,4), ... reach a fixed-point-free involution;
  // (k-2)/2 crossing ee moves (k-3,k-1), ..., (1,3) then reach the top.
  Permutation through = bottom;
  for (int s = 1; s <= k - 3; s += 2) through = ct(through, RiseLabel{s, s + 1});
  Permutation check = through;
  for (int s = k - 3; s >= 1; s -= 2) check = ct(check, RiseLabel{s, s + 2});
  if (long_core.back() != top || check != top) {
    throw std::logic_error("prop20 core chains do not reach " + top.word());
  }
  const std::vector<Permutation> short_core{bottom, through, top};

  const int extra_fixed = i - 2;
  Witness w{FixedPointSpec::make(n, {i - 2, i + 2 * m}), pad(bottom, n, extra_fixed), pad(top, n, extra_fixed),
            padded_chain(long_core, n, extra_fixed), padded_chain(short_core, n, extra_fixed), false};
  w.verified = verify_witness(w);
  return w;
}

}  // namespace invbruhat
