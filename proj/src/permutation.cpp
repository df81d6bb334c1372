#include "invbruhat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace invbruhat {

void check_size(int n) {
  if (n < 1 || n > kMaxN) {
    throw Error("permutation size " + std::to_string(n) + " outside supported range 1.." +
                std::to_string(kMaxN));
  }
}

void check_same_size(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error("size mismatch: " + std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  }
}

Permutation Permutation::identity(int n) {
  check_size(n);
  Permutation p;
  p.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i + 1);
  return p;
}

Permutation Permutation::reversal(int n) {
  check_size(n);
  Permutation p;
  p.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(n - i);
  return p;
}

Permutation Permutation::from_window(std::span<const int> window) {
  const int n = static_cast<int>(window.size());
  check_size(n);
  std::array<bool, kMaxN + 1> seen{};
  Permutation p;
  p.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int v = window[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error("not a permutation of 1.." + std::to_string(n) + " (bad or repeated value " +
                  std::to_string(v) + ")");
    }
    seen[static_cast<std::size_t>(v)] = true;
    p.images_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error("empty permutation text");

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    if (text.size() > 9) throw Error("digit form is only accepted for n <= 9; use commas");
    for (char c : text) {
      if (c < '1' || c > '9') throw Error("invalid character in permutation word: '" + std::string(1, c) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t stop = text.find(',', start);
      if (stop == std::string_view::npos) stop = text.size();
      std::string_view token = text.substr(start, stop - start);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error("invalid permutation entry '" + std::string(token) + "'");
      }
      values.push_back(v);
      start = stop + 1;
    }
  }
  return from_window(values);
}

std::vector<int> Permutation::window() const {
  std::vector<int> w(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) w[static_cast<std::size_t>(i)] = images_[static_cast<std::size_t>(i)];
  return w;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::string Permutation::word() const {
  if (n_ > 9) return to_string();
  std::string out;
  for (int i = 0; i < n_; ++i) out += static_cast<char>('0' + images_[static_cast<std::size_t>(i)]);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n_; ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_size(p, q);
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int x = 1; x <= p.size(); ++x) w[static_cast<std::size_t>(x - 1)] = p(q(x));
  return Permutation::from_window(w);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int x = 1; x <= p.size(); ++x) w[static_cast<std::size_t>(p(x) - 1)] = x;
  return Permutation::from_window(w);
}

bool is_involution(const Permutation& p) {
  for (int x = 1; x <= p.size(); ++x) {
    if (p(p(x)) != x) return false;
  }
  return true;
}

int inversions(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) ++count;
    }
  }
  return count;
}

int exceedances(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) > i) ++count;
  }
  return count;
}

int fixed_point_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) ++count;
  }
  return count;
}

PermutationStats statistics(const Permutation& p) {
  PermutationStats s;
  s.inv = inversions(p);
  s.exc = exceedances(p);
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) s.fixed.push_back(i);
  }
  return s;
}

namespace {

// Smallest unassigned point is either fixed or paired with a larger
// unassigned point.
void extend_matching(std::vector<int>& window, int n, std::vector<Permutation>& out) {
  int first = 0;
  while (first < n && window[static_cast<std::size_t>(first)] != 0) ++first;
  if (first == n) {
    out.push_back(Permutation::from_window(window));
    return;
  }
  window[static_cast<std::size_t>(first)] = first + 1;
  extend_matching(window, n, out);
  for (int partner = first + 1; partner < n; ++partner) {
    if (window[static_cast<std::size_t>(partner)] != 0) continue;
    window[static_cast<std::size_t>(first)] = partner + 1;
    window[static_cast<std::size_t>(partner)] = first + 1;
    extend_matching(window, n, out);
    window[static_cast<std::size_t>(partner)] = 0;
  }
  window[static_cast<std::size_t>(first)] = 0;
}

}  // namespace

std::vector<Permutation> enumerate_involutions(int n) {
  check_size(n);
  std::vector<int> window(static_cast<std::size_t>(n), 0);
  std::vector<Permutation> out;
  extend_matching(window, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace invbruhat
