#pragma once

#include <compare>
#include <string>

namespace invbruhat {

/// Index pair (i, j) with i < j, used both as a rise coordinate and as the
/// label on a cover of I_n. The defaulted ordering is the lexicographic one.
struct RiseLabel {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const RiseLabel&, const RiseLabel&) = default;
  friend bool operator==(const RiseLabel&, const RiseLabel&) = default;

  [[nodiscard]] std::string to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

}  // namespace invbruhat
