#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "invbruhat/report.hpp"

using namespace invbruhat;
using json = nlohmann::ordered_json;

namespace {
std::vector<json> records(const std::string& body) {
  std::vector<json> out;
  std::istringstream in(body);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}
}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("dot") == Format::dot);
  CHECK(parse_format("jsonl") == Format::jsonl);
  CHECK(parse_format("text") == Format::text);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK(parse_chain_query("all") == ChainQuery::all);
  CHECK_THROWS_AS(parse_chain_query("some"), Error);
  CHECK_THROWS_AS(cmd_enumerate(make_spec(4, {0}), Format::dot), Error);
}

TEST_CASE("enumerate records") {
  const auto out = cmd_enumerate(make_spec(6, {0}), Format::jsonl);
  CHECK(out.ok);
  const auto rs = records(out.body);
  REQUIRE(rs.size() == 15);
  CHECK(rs.front()["word"] == "214365");
  CHECK(rs.front()["rank_class"] == 0);
  CHECK(rs.back()["word"] == "654321");
  CHECK(rs.back()["rank_class"] == 6);
  CHECK(rs.back()["rank_in"] == 9);
  std::vector<std::string> keys;
  for (auto it = rs.front().begin(); it != rs.front().end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"word", "n", "fixed_points", "inv", "exc", "rank_in", "rank_class"});

  const auto ungraded = records(cmd_enumerate(make_spec(6, {2}), Format::jsonl).body);
  CHECK(ungraded.front()["rank_class"].is_null());

  CHECK(cmd_enumerate(make_spec(4, {0}), Format::jsonl).body == cmd_enumerate(make_spec(4, {0}), Format::jsonl).body);
}

TEST_CASE("hasse output") {
  const auto dot = cmd_hasse(make_spec(4, {0}), Format::dot).body;
  CHECK(dot ==
        "digraph \"F_4^{0}\" {\n"
        "  rankdir=BT;\n"
        "  \"2143\";\n"
        "  \"3412\";\n"
        "  \"4321\";\n"
        "  \"2143\" -> \"3412\" [label=\"(1,4)\"];\n"
        "  \"3412\" -> \"4321\" [label=\"(1,2)\"];\n"
        "}\n");
  const auto rs = records(cmd_hasse(FixedPointSpec::all_involutions(4), Format::jsonl).body);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (const auto& r : rs) (r["type"] == "node" ? nodes : edges) += 1;
  CHECK(nodes == 10);
  CHECK(edges == 17);
}

TEST_CASE("check-graded summary") {
  const auto out = cmd_check_graded(all_specs(6), Format::jsonl);
  CHECK(out.ok);
  const auto rs = records(out.body);
  REQUIRE(rs.size() == 16);
  CHECK(rs.back()["status"] == "pass");
  CHECK(rs.back()["specs"] == 15);
  for (std::size_t t = 0; t + 1 < rs.size(); ++t) CHECK(rs[t]["agree"] == true);
}

TEST_CASE("chains and counterexample records") {
  const auto out = cmd_chains(Permutation::parse("124365"), Permutation::parse("426153"), ChainQuery::all, Format::jsonl);
  CHECK(out.ok);
  const auto rs = records(out.body);
  int increasing = 0;
  for (std::size_t t = 0; t + 1 < rs.size(); ++t) increasing += rs[t]["kind"] == "increasing" ? 1 : 0;
  CHECK(increasing == 1);
  CHECK(rs.back()["status"] == "pass");
  CHECK_THROWS_AS(cmd_chains(Permutation::parse("2143"), Permutation::parse("1234"), ChainQuery::all, Format::jsonl),
                  Error);

  const auto ce = records(cmd_counterexample(20, 6, 2, 1, Format::jsonl).body);
  REQUIRE(ce.size() == 3);
  CHECK(ce[0]["chain"] == "long");
  CHECK(ce[0]["length"] == 4);
  CHECK(ce[1]["fixed_points"] == json::array({4, 0, 4}));
  CHECK(ce[2]["class"] == "F_6^{0,4}");
  CHECK(ce[2]["verified"] == true);
  CHECK_THROWS_AS(cmd_counterexample(20, 6, 2, std::nullopt, Format::jsonl), Error);
  CHECK_THROWS_AS(cmd_counterexample(18, 6, 2, 1, Format::jsonl), Error);
}

TEST_CASE("el-verify") {
  const auto rev = cmd_el_verify(make_spec(4, {0}), std::nullopt, Format::jsonl);
  CHECK(rev.ok);
  CHECK(records(rev.body).back()["result"] == "el");
  CHECK(records(rev.body).back()["order"] == "reversed-lex");
  const auto bad = cmd_el_verify(make_spec(6, {0}), false, Format::jsonl);
  CHECK_FALSE(bad.ok);
  CHECK(records(bad.body).back()["result"] == "not-el");
  const auto na = cmd_el_verify(make_spec(6, {2}), std::nullopt, Format::jsonl);
  CHECK(na.ok);
  CHECK(records(na.body).back()["result"] == "not-applicable");
}
