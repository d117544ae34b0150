#include <doctest.h>

#include "stonework/contrast.hpp"
#include "stonework/error.hpp"
#include "stonework/generators.hpp"
#include "stonework/json_io.hpp"

using namespace stonework;
namespace jio = stonework::json_io;
using json    = nlohmann::json;

namespace {
  // emit, print, parse, consume
  json reparse(json const& j) {
    return jio::parse(j.dump());
  }
}  // namespace

TEST_CASE("parse errors carry a position") {
  try {
    jio::parse("{\n  \"size\": 1,\n  oops\n}");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(e.line == 3);
    CHECK(e.column >= 3);
  }
  CHECK_THROWS_AS(jio::parse(""), ParseError);
}

TEST_CASE("monoid schema") {
  auto m = ContrastMonoid(2).monoid();
  auto j = jio::to_json(m);
  CHECK(j["size"] == 6);
  CHECK(j["identity"] == 3);
  CHECK(jio::monoid_from_json(reparse(j)) == m);
  CHECK_THROWS_AS(jio::monoid_from_json(json{{"size", 1}, {"table", {{0}}}}), InvalidArgument);
  CHECK_THROWS_AS(jio::monoid_from_json(json{{"size", 2}, {"identity", 0}, {"table", {{0}}}}),
                  InvalidArgument);
  CHECK_THROWS_AS(jio::monoid_from_json(json{{"size", 2}, {"identity", 0}, {"table", {{0, 0}, {1, 1}}}}),
                  IdentityViolation);
}

TEST_CASE("self-map schemas") {
  CHECK(jio::selfmap_from_json(json{{"map", {1, 1, 0}}}) == SelfMap{1, 1, 0});
  CHECK(jio::selfmap_from_json(json::array({2, 0, 1})) == SelfMap{2, 0, 1});
  CHECK_THROWS_AS(jio::selfmap_from_json(json{{"map", {0, 3}}}), InvalidArgument);
  CHECK_THROWS_AS(jio::selfmap_from_json(json{{"map", "x"}}), InvalidArgument);
  auto t = full_selfmap_monoid(2);
  CHECK(jio::selfmap_monoid_from_json(reparse(jio::to_json(t))) == t);
}

TEST_CASE("ring schemas") {
  BoolRing ring(3);
  CHECK(jio::ring_from_json(reparse(jio::to_json(ring))) == ring);
  RingEndo mu(ring, {0b001, 0b110, 0b000});
  auto     j = jio::to_json(mu);
  CHECK(j["atom_images"] == json::array({"100", "011", "000"}));
  CHECK(jio::ring_endo_from_json(reparse(j)) == mu);
  GroupEndo sigma(ring, {0b011, 0b110, 0b100});
  CHECK(jio::group_endo_from_json(reparse(jio::to_json(sigma))) == sigma);
  CHECK_THROWS_AS(jio::ring_endo_from_json(json::array({"10", "01"})), InvalidArgument);
  CHECK_THROWS_AS(jio::ring_endo_from_json(json{{"atom_images", {"10", "10"}}}), InvalidArgument);
}

TEST_CASE("metric, partition and chain schemas") {
  Partition p({0, 1, 0, 2});
  auto      pj = jio::to_json(p);
  CHECK(pj["classes"] == json::parse("[[0,2],[1],[3]]"));
  CHECK(jio::partition_from_json(reparse(pj)) == p);

  Rng  rng(3);
  auto d  = random_ultrametric(4, rng, true);
  CHECK(jio::metric_from_json(reparse(jio::to_json(d))) == d);
  CHECK_THROWS_AS(jio::metric_from_json(json::parse(R"({"dist": [["0", "1"], ["2", "0"]]})")), InvalidMetric);
  CHECK_THROWS_AS(jio::metric_from_json(json::parse(R"({"dist": [["0", "x"], ["x", "0"]]})")), InvalidArgument);
  CHECK(jio::metric_from_json(json::parse(R"({"dist": [[0, "1/2"], ["1/2", 0]]})"))(0, 1) == Rational(1, 2));

  auto chain = random_chain(5, 3, rng);
  auto cj    = reparse(jio::to_json(chain, ChainTail::stabilized));
  CHECK(jio::chain_from_json(cj).levels() == chain.levels());
  CHECK(jio::chain_tail_from_json(cj) == ChainTail::stabilized);
  CHECK(jio::chain_tail_from_json(json{{"carrier_size", 2}, {"chain", json::array()}})
        == ChainTail::discrete);
}

TEST_CASE("action, family and cover schemas") {
  auto a  = MonoidAction::left_regular(ContrastMonoid(1).monoid());
  auto a2 = jio::action_from_json(reparse(jio::to_json(a)));
  CHECK(a2.table() == a.table());
  CHECK(a2.monoid() == a.monoid());

  PartitionFamily f(3, {Partition({0, 0, 1}), Partition::discrete(3)});
  CHECK(jio::family_from_json(reparse(jio::to_json(f))) == f);

  Cover c(4, {0b0011, 0b0110, 0b1000});
  auto  cj = jio::to_json(c);
  CHECK(cj["blocks"] == json::parse("[[0,1],[1,2],[3]]"));
  CHECK(jio::cover_from_json(reparse(cj)) == c);
}

TEST_CASE("rationals") {
  CHECK(jio::rational_to_json(Rational(3, 4)) == "3/4");
  CHECK(jio::rational_from_json(json(2)) == Rational(2));
  CHECK(jio::rational_from_json(json("1/3")) == Rational(1, 3));
  CHECK_THROWS_AS(jio::rational_from_json(json(0.5)), InvalidArgument);
}
