#include "invbruhat/incitti.hpp"

#include <initializer_list>

namespace invbruhat {

namespace {

enum class PointKind { fixed, exceedance, deficiency };

PointKind kind_of(const Permutation& p, int i) {
  if (p(i) == i) return PointKind::fixed;
  return p(i) > i ? PointKind::exceedance : PointKind::deficiency;
}

void check_label(const Permutation& p, RiseLabel label) {
  if (label.i < 1 || label.j > p.size() || label.i >= label.j) {
    throw Error("label " + label.to_string() + " is not a pair 1 <= i < j <= " + std::to_string(p.size()));
  }
}

void require_involution(const Permutation& p) {
  if (!is_involution(p)) throw Error(p.word() + " is not an involution");
}

/// Permutation given by a product of disjoint cycles on {1..n}.
Permutation from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) w[static_cast<std::size_t>(x - 1)] = x;
  for (const auto& cycle : cycles) {
    const int* data = cycle.begin();
    const auto length = cycle.size();
    for (std::size_t t = 0; t < length; ++t) {
      w[static_cast<std::size_t>(data[t] - 1)] = data[(t + 1) % length];
    }
  }
  return Permutation::from_window(w);
}

/// Cycle c of the covering transformation, so that ct(p) = p * c.
Permutation transformation_cycle(const Permutation& p, RiseLabel label, RiseKind kind) {
  const int n = p.size();
  const int i = label.i;
  const int j = label.j;
  switch (kind) {
    case RiseKind::type1_ff:
      return from_cycles(n, {{i, j}});
    case RiseKind::type2_fe:
      return from_cycles(n, {{i, j, p(j)}});
    case RiseKind::type3_ef:
      return from_cycles(n, {{i, j, p(i)}});
    case RiseKind::type4_ee_noncrossing:
    case RiseKind::type6_ed:
      return from_cycles(n, {{i, j}, {p(i), p(j)}});
    case RiseKind::type5_ee_crossing:
      return from_cycles(n, {{i, j, p(j), p(i)}});
    default:
      throw Error("rise " + label.to_string() + " of " + p.word() + " is not suitable (" +
                  std::string(to_string(kind)) + ")");
  }
}

}  // namespace

std::string_view to_string(RiseKind kind) {
  switch (kind) {
    case RiseKind::not_a_rise: return "not-a-rise";
    case RiseKind::non_free_rise: return "non-free-rise";
    case RiseKind::unsuitable_free_rise: return "unsuitable-free-rise";
    case RiseKind::type1_ff: return "type1-ff";
    case RiseKind::type2_fe: return "type2-fe";
    case RiseKind::type3_ef: return "type3-ef";
    case RiseKind::type4_ee_noncrossing: return "type4-ee-noncrossing";
    case RiseKind::type5_ee_crossing: return "type5-ee-crossing";
    case RiseKind::type6_ed: return "type6-ed";
  }
  return "unknown";
}

RiseKind classify_rise(const Permutation& p, RiseLabel label) {
  require_involution(p);
  check_label(p, label);
  const int i = label.i;
  const int j = label.j;
  if (p(i) > p(j)) return RiseKind::not_a_rise;
  for (int k = i + 1; k < j; ++k) {
    if (p(k) > p(i) && p(k) < p(j)) return RiseKind::non_free_rise;
  }

  const PointKind left = kind_of(p, i);
  const PointKind right = kind_of(p, j);
  using enum PointKind;
  if (left == fixed && right == fixed) return RiseKind::type1_ff;
  if (left == fixed && right == exceedance) return RiseKind::type2_fe;
  if (left == exceedance && right == fixed) return RiseKind::type3_ef;
  if (left == exceedance && right == exceedance) {
    return p(i) < j ? RiseKind::type5_ee_crossing : RiseKind::type4_ee_noncrossing;
  }
  if (left == exceedance && right == deficiency) return RiseKind::type6_ed;
  return RiseKind::unsuitable_free_rise;
}

Permutation ct(const Permutation& p, RiseLabel label) {
  const RiseKind kind = classify_rise(p, label);
  return compose(p, transformation_cycle(p, label, kind));
}

std::optional<Permutation> ict(const Permutation& q, RiseLabel label) {
  require_involution(q);
  check_label(q, label);
  const int n = q.size();
  const int i = label.i;
  const int j = label.j;
  if (q(i) < q(j)) throw Error("label " + label.to_string() + " is not an inversion of " + q.word());

  // Preimage p satisfies p = q * c^-1 for the cycle c of its own rise type.
  // Reading the cycle off q:
  //   type 1:     c = (i j)               with q(i) = j
  //   types 4, 6: c = (i j)(q(j) q(i))
  //   type 2:     c = (i, j, q(i))        with q(j) = j
  //   type 3:     c = (i, j, r)           r a fixed point of q in (i, j)
  //   type 5:     c = (i, j, q(i), r)     r a fixed point of q in (i, j)
  std::vector<Permutation> cycles;
  const int a = q(j);
  const int b = q(i);
  if (b == j) {
    cycles.push_back(from_cycles(n, {{i, j}}));
  } else if (a != i && a != j && b != i && b != j && a != b) {
    cycles.push_back(from_cycles(n, {{i, j}, {a, b}}));
  }
  if (q(j) == j && b != i && b != j) cycles.push_back(from_cycles(n, {{i, j, b}}));
  for (int r = i + 1; r < j; ++r) {
    if (q(r) != r) continue;
    cycles.push_back(from_cycles(n, {{i, j, r}}));
    if (b != i && b != j && b != r) cycles.push_back(from_cycles(n, {{i, j, b, r}}));
  }

  for (const auto& cycle : cycles) {
    const Permutation candidate = compose(q, inverse(cycle));
    if (!is_involution(candidate)) continue;
    if (!is_suitable(classify_rise(candidate, label))) continue;
    if (ct(candidate, label) == q) return candidate;
  }
  return std::nullopt;
}

std::vector<LabelledCover> covers(const Permutation& p) {
  require_involution(p);
  std::vector<LabelledCover> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      const RiseLabel label{i, j};
      const RiseKind kind = classify_rise(p, label);
      if (is_suitable(kind)) out.push_back({label, compose(p, transformation_cycle(p, label, kind))});
    }
  }
  return out;
}

std::optional<RiseLabel> cover_label(const Permutation& p, const Permutation& q) {
  check_same_size(p, q);
  for (const auto& cover : covers(p)) {
    if (cover.target == q) return cover.label;
  }
  return std::nullopt;
}

}  // namespace invbruhat
