#pragma once

// Permutations of {1..n} in one-line notation, plus the involution
// statistics (inversions, exceedances, fixed points) used by every rank
// formula in the library.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invbruhat {

/// Largest supported n. |I_12| = 140152 still fits comfortably in memory.
inline constexpr int kMaxN = 12;

/// Raised for malformed or mismatched input anywhere in the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection of {1..n}. Position i (1-based) holds the image of i.
/// Values are immutable once constructed.
class Permutation {
 public:
  static Permutation identity(int n);

  /// Reversal n(n-1)...1, the Bruhat maximum of S_n.
  static Permutation reversal(int n);

  /// Throws Error unless `window` is a permutation of {1..window.size()}.
  static Permutation from_window(std::span<const int> window);

  /// Accepts "4,2,6,1,5,3" for any n, and the compact digit form "426153"
  /// when n <= 9. Surrounding whitespace is ignored.
  static Permutation parse(std::string_view text);

  [[nodiscard]] int size() const { return n_; }

  /// Image of `i`, 1-based.
  [[nodiscard]] int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  [[nodiscard]] std::vector<int> window() const;

  /// Canonical comma-separated form; parse(to_string()) == *this.
  [[nodiscard]] std::string to_string() const;

  /// Digit word ("426153") for n <= 9, otherwise the comma form.
  [[nodiscard]] std::string word() const;

  [[nodiscard]] bool is_identity() const;

  /// Lexicographic on (n, one-line word).
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::int8_t n_ = 0;
  std::array<std::int8_t, kMaxN> images_{};
};

struct PermutationStats {
  int inv = 0;
  int exc = 0;
  std::vector<int> fixed;  // ascending
};

/// result(x) = p(q(x)); q acts first.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

bool is_involution(const Permutation& p);

PermutationStats statistics(const Permutation& p);

int inversions(const Permutation& p);
int exceedances(const Permutation& p);
int fixed_point_count(const Permutation& p);

/// All involutions of S_n, lexicographic on one-line words.
std::vector<Permutation> enumerate_involutions(int n);

void check_size(int n);
void check_same_size(const Permutation& p, const Permutation& q);

}  // namespace invbruhat

template <>
struct std::hash<invbruhat::Permutation> {
  std::size_t operator()(const invbruhat::Permutation& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.size());
    for (int i = 1; i <= p.size(); ++i) h = h * 13 + static_cast<std::size_t>(p(i));
    return h;
  }
};
