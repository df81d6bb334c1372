#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "invbruhat/bruhat.hpp"

using namespace invbruhat;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

std::set<std::pair<Permutation, Permutation>> edge_set(const PosetView& view) {
  std::set<std::pair<Permutation, Permutation>> out;
  for (const auto& e : view.edges()) out.insert({view.element(e.lower), view.element(e.upper)});
  return out;
}
}  // namespace

TEST_CASE("dot table entries") {
  CHECK(dot_table(P("1234"))(2, 2) == 1);
  CHECK(dot_table(P("426153"))(1, 4) == 1);
  for (const auto& p : oracle::all_permutations(5)) {
    const DotTable t(p);
    CHECK(t(5, 1) == 5);
    for (int k = 1; k <= 5; ++k) {
      for (int l = 1; l <= 5; ++l) {
        CHECK(t(k, l) == oracle::dot_entry(p, k, l));
        if (k > 1) CHECK(t(k, l) >= t(k - 1, l));
        if (l > 1) CHECK(t(k, l) <= t(k, l - 1));
      }
    }
  }
}

TEST_CASE("bruhat_leq examples") {
  CHECK(bruhat_leq(P("124365"), P("426153")));
  CHECK(bruhat_leq(P("426153"), P("426153")));
  CHECK(bruhat_leq(P("2143"), P("3412")));
  CHECK_FALSE(bruhat_leq(P("3412"), P("2143")));
  CHECK_THROWS_AS(bruhat_leq(P("12"), P("123")), Error);
}

TEST_CASE("bruhat_leq agrees with dot tables and with the transposition-cover closure") {
  for (int n = 1; n <= 5; ++n) {
    const oracle::TranspositionOrder order(n);
    const auto& perms = order.permutations();
    for (const auto& p : perms) {
      for (const auto& q : perms) {
        const bool leq = bruhat_leq(p, q);
        CHECK(leq == order.leq(p, q));
        CHECK(leq == DotTable(p).dominated_by(DotTable(q)));
      }
    }
  }
}

TEST_CASE("bruhat order axioms") {
  const auto perms = oracle::all_permutations(5);
  for (const auto& p : perms) {
    CHECK(bruhat_leq(p, p));
    CHECK(bruhat_leq(Permutation::identity(5), p));
    CHECK(bruhat_leq(p, Permutation::reversal(5)));
    for (const auto& q : perms) {
      if (p != q && bruhat_leq(p, q)) CHECK_FALSE(bruhat_leq(q, p));
    }
  }
  // Transitivity, exhaustively on S_4 and on random triples in S_8.
  const auto s4 = oracle::all_permutations(4);
  for (const auto& a : s4)
    for (const auto& b : s4)
      for (const auto& c : s4)
        if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));

  std::mt19937 rng(7);
  const auto s8 = oracle::all_permutations(8);
  int chained = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto& a = s8[rng() % s8.size()];
    const auto& b = s8[rng() % s8.size()];
    const auto& c = s8[rng() % s8.size()];
    if (bruhat_leq(a, b) && bruhat_leq(b, c)) {
      ++chained;
      CHECK(bruhat_leq(a, c));
    }
    if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
  }
  CHECK(chained > 0);
}

TEST_CASE("interval") {
  const auto i4 = enumerate_involutions(4);
  CHECK(interval(P("2143"), P("2143"), i4) == std::vector<Permutation>{P("2143")});
  CHECK(interval(P("1234"), P("2143"), i4) ==
        std::vector<Permutation>{P("1234"), P("1243"), P("2134"), P("2143")});
  const auto i6 = enumerate_involutions(6);
  const auto big = interval(P("124365"), P("426153"), i6);
  for (const char* w : {"126453", "216453", "143265", "423165", "124365", "426153"}) {
    CHECK(std::find(big.begin(), big.end(), P(w)) != big.end());
  }
  CHECK_THROWS_AS(interval(P("2143"), P("1234"), i4), Error);
}

TEST_CASE("poset_view") {
  CHECK(poset_view({P("2143")}).edges().empty());

  const auto f40 = poset_view({P("2143"), P("3412"), P("4321")});
  CHECK(edge_set(f40) == std::set<std::pair<Permutation, Permutation>>{{P("2143"), P("3412")}, {P("3412"), P("4321")}});
  CHECK(f40.bounded());

  std::vector<Permutation> f62;
  for (const auto& p : enumerate_involutions(6))
    if (fixed_point_count(p) == 2) f62.push_back(p);
  const auto view = poset_view(f62);
  const auto lower = *view.index_of(P("124365"));
  const auto upper = *view.index_of(P("216453"));
  CHECK(view.edge_between(lower, upper).has_value());
  CHECK_FALSE(view.index_of(P("126453")).has_value());

  // Transitive reduction against the betweenness oracle.
  for (int n = 3; n <= 5; ++n) {
    const auto perms = oracle::all_permutations(n);
    const auto expected = oracle::covers_by_betweenness(perms, [](const auto& a, const auto& b) { return bruhat_leq(a, b); });
    CHECK(edge_set(poset_view(perms)) == expected);
  }
}
