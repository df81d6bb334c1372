#pragma once

// Rise classification on involutions and the covering transformations that
// generate the covering relation of I_n.
//
// Cycle products are read with the cycle acting first:
//   ct(p, (i,j)) = p * c,  i.e.  ct(p, (i,j))(x) = p(c(x)).
// This orientation reproduces the published chain data (for example ct at
// (3,5) sends 124365 to 126453) and is cross-checked against the Bruhat
// cover oracle in the tests.

#include <optional>
#include <string_view>
#include <vector>

#include "invbruhat/label.hpp"
#include "invbruhat/permutation.hpp"

namespace invbruhat {

enum class RiseKind {
  not_a_rise,
  non_free_rise,
  // free rise whose fixed/exceedance/deficiency pattern is fd, df, de or dd
  unsuitable_free_rise,
  type1_ff,
  type2_fe,
  type3_ef,
  type4_ee_noncrossing,
  type5_ee_crossing,
  type6_ed,
};

std::string_view to_string(RiseKind kind);

[[nodiscard]] constexpr bool is_suitable(RiseKind kind) {
  return kind >= RiseKind::type1_ff;
}

/// Throws Error if p is not an involution or the label is out of range.
RiseKind classify_rise(const Permutation& p, RiseLabel label);

/// Covering transformation at a suitable rise. Throws Error otherwise.
Permutation ct(const Permutation& p, RiseLabel label);

/// The unique involution p with ct(p, label) == q, if any. `label` must be
/// an inversion of q.
std::optional<Permutation> ict(const Permutation& q, RiseLabel label);

struct LabelledCover {
  RiseLabel label;
  Permutation target;
};

/// Upper covers of p in I_n, ordered by label.
std::vector<LabelledCover> covers(const Permutation& p);

/// Label of the I_n cover p < q, or nullopt when q does not cover p in I_n.
std::optional<RiseLabel> cover_label(const Permutation& p, const Permutation& q);

}  // namespace invbruhat
