#include <doctest.h>

#include "../oracles.hpp"
#include "invbruhat/bruhat.hpp"
#include "invbruhat/incitti.hpp"

using namespace invbruhat;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("classify_rise") {
  CHECK(classify_rise(P("1234"), {1, 2}) == RiseKind::type1_ff);
  CHECK(classify_rise(P("1234"), {1, 3}) == RiseKind::non_free_rise);
  CHECK(classify_rise(P("124365"), {3, 5}) == RiseKind::type5_ee_crossing);
  CHECK(classify_rise(P("3412"), {1, 2}) == RiseKind::type4_ee_noncrossing);
  CHECK(classify_rise(P("2143"), {1, 4}) == RiseKind::type6_ed);
  CHECK(classify_rise(P("123465"), {4, 5}) == RiseKind::type2_fe);
  CHECK(classify_rise(P("2134"), {1, 2}) == RiseKind::not_a_rise);
  CHECK(classify_rise(P("2134"), {2, 3}) == RiseKind::unsuitable_free_rise);  // df
  CHECK_THROWS_AS(classify_rise(P("2314"), {1, 2}), Error);
  CHECK_THROWS_AS(classify_rise(P("1234"), {2, 2}), Error);
  CHECK_THROWS_AS(classify_rise(P("1234"), {1, 5}), Error);
}

TEST_CASE("ct examples") {
  CHECK(ct(P("124365"), {3, 5}) == P("126453"));
  CHECK(ct(P("1234"), {1, 2}) == P("2134"));
  CHECK(ct(P("2143"), {1, 4}) == P("3412"));
  CHECK(ct(P("3412"), {1, 2}) == P("4321"));
  CHECK(ct(P("123465"), {4, 5}) == P("123654"));
  CHECK_THROWS_AS(ct(P("1234"), {1, 3}), Error);
}

TEST_CASE("ict examples") {
  CHECK(ict(P("2134"), {1, 2}) == P("1234"));
  CHECK(ict(P("126453"), {3, 5}) == P("124365"));
  const auto searched = oracle::ict_by_search(P("4321"), {1, 3});
  const auto found = ict(P("4321"), {1, 3});
  CHECK(searched.size() <= 1);
  CHECK(found.has_value() == !searched.empty());
  if (found) CHECK(*found == searched.front());
  CHECK_THROWS_AS(ict(P("1234"), {1, 2}), Error);
}

TEST_CASE("ict inverts ct and agrees with exhaustive search") {
  for (int n = 2; n <= 6; ++n) {
    const auto inv = enumerate_involutions(n);
    for (const auto& q : inv) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (q(i) < q(j)) continue;
          const auto searched = oracle::ict_by_search(q, {i, j});
          REQUIRE(searched.size() <= 1);
          const auto found = ict(q, {i, j});
          CHECK(found.has_value() == !searched.empty());
          if (found && !searched.empty()) CHECK(*found == searched.front());
        }
      }
    }
  }
}

TEST_CASE("covers examples") {
  CHECK(covers(P("4321")).empty());
  const auto c = covers(P("1234"));
  REQUIRE(c.size() == 3);
  CHECK(c[0].label == RiseLabel{1, 2});
  CHECK(c[0].target == P("2134"));
  CHECK(c[1].label == RiseLabel{2, 3});
  CHECK(c[1].target == P("1324"));
  CHECK(c[2].label == RiseLabel{3, 4});
  CHECK(c[2].target == P("1243"));

  bool saw35 = false;
  bool saw23 = false;
  for (const auto& cover : covers(P("124365"))) {
    saw35 |= cover.label == RiseLabel{3, 5} && cover.target == P("126453");
    saw23 |= cover.label == RiseLabel{2, 3} && cover.target == P("143265");
  }
  CHECK(saw35);
  CHECK(saw23);
}

TEST_CASE("covering transformation invariants") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_involutions(n)) {
      const int fixed = fixed_point_count(p);
      const int rank = (inversions(p) + exceedances(p)) / 2;
      for (const auto& [label, q] : covers(p)) {
        CHECK(is_involution(q));
        CHECK((inversions(q) + exceedances(q)) / 2 == rank + 1);
        CHECK(q(label.i) > q(label.j));
        const int delta = fixed_point_count(q) - fixed;
        switch (classify_rise(p, label)) {
          case RiseKind::type1_ff: CHECK(delta == -2); break;
          case RiseKind::type5_ee_crossing: CHECK(delta == 2); break;
          default: CHECK(delta == 0); break;
        }
        CHECK(ict(q, label) == p);
        CHECK(cover_label(p, q) == label);
      }
    }
  }
}

TEST_CASE("covers agree with the Bruhat Hasse diagram of I_n") {
  for (int n = 1; n <= 6; ++n) {
    const auto inv = enumerate_involutions(n);
    const auto view = poset_view(inv);
    std::set<std::pair<Permutation, Permutation>> from_order;
    for (const auto& e : view.edges()) from_order.insert({view.element(e.lower), view.element(e.upper)});
    std::set<std::pair<Permutation, Permutation>> from_moves;
    for (const auto& p : inv)
      for (const auto& c : covers(p)) from_moves.insert({p, c.target});
    CHECK(from_order == from_moves);
  }
}
