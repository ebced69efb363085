#include <doctest.h>

#include <json.hpp>

#include <random>
#include <stdexcept>

#include "polycount/count_table.hpp"
#include "polycount/full_count.hpp"
#include "polycount/oeis.hpp"

using namespace polycount;

TEST_CASE("JSON emission schema") {
  CountTable table;
  table.family = "full";
  table.m = 2;
  table.rows = {{2, BigInt(1)}, {3, BigInt(4)}, {4, BigInt(14)}};

  const std::string text = to_json(table);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("family") == "full");
  CHECK(j.at("m") == 2);
  CHECK_FALSE(j.contains("coefficients"));
  REQUIRE(j.at("rows").size() == 3);
  CHECK(j.at("rows")[0].at("n") == 2);
  CHECK(j.at("rows")[0].at("count") == "1");
  CHECK(j.at("rows")[2].at("count") == "14");

  // Stable key order.
  CHECK(text.find("\"family\"") < text.find("\"m\""));
  CHECK(text.find("\"m\"") < text.find("\"rows\""));
}

TEST_CASE("coefficients serialize as decimal strings") {
  CountTable table;
  table.family = "path";
  table.m = 4;
  table.coefficients = std::vector<BigInt>{BigInt(1), BigInt(-4), BigInt(3)};

  const auto j = nlohmann::json::parse(to_json(table));
  REQUIRE(j.contains("coefficients"));
  CHECK(j.at("coefficients") == nlohmann::json({"1", "-4", "3"}));
  CHECK(j.at("rows").empty());
}

TEST_CASE("empty row range emits rows: []") {
  CountTable table;
  table.family = "full";
  table.m = 3;
  const auto j = nlohmann::json::parse(to_json(table));
  CHECK(j.at("rows").is_array());
  CHECK(j.at("rows").empty());
  CHECK(to_csv(table) == "n,count\n");
}

TEST_CASE("round trips preserve every digit") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> m_dist(2, 9);
  for (int trial = 0; trial < 25; ++trial) {
    CountTable table;
    table.family = trial % 2 == 0 ? "full" : "path";
    table.m = m_dist(rng);
    BigInt big = 1;
    for (int i = 0; i < trial; ++i) {
      big *= 1000000007;
    }
    table.rows = {{2, big}, {5, -big + 3}, {9, big * big}};
    if (trial % 3 == 0) {
      table.coefficients = std::vector<BigInt>{BigInt(1), -big};
    }

    const CountTable via_json = count_table_from_json(to_json(table));
    CHECK(via_json == table);

    const CountTable via_csv = count_table_from_csv(to_csv(table));
    CHECK(via_csv.rows == table.rows);  // CSV carries the rows only
  }
}

TEST_CASE("large exact counts survive the decimal round trip") {
  const BigInt f = full_count_convolution(120, 2);
  CHECK(parse_decimal(to_decimal(f)) == f);
  CHECK(to_decimal(f).size() > 60);  // genuinely beyond 64-bit
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(count_table_from_csv("count,n\n"), std::invalid_argument);
  CHECK_THROWS_AS(count_table_from_csv("n,count\n3,12x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("12.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("-"), std::invalid_argument);
  CHECK(parse_decimal("-17") == -17);

  CountTable unsorted;
  unsorted.family = "full";
  unsorted.m = 2;
  unsorted.rows = {{5, BigInt(1)}, {3, BigInt(2)}};
  CHECK_THROWS_AS(to_json(unsorted), std::invalid_argument);
}

TEST_CASE("embedded OEIS fixtures") {
  const auto fixtures = oeis_fixtures();
  REQUIRE(fixtures.size() == 3);
  CHECK(fixtures[0].id == "A002057");
  CHECK(fixtures[1].id == "A003517");
  CHECK(fixtures[2].id == "A003518");
  for (const OeisFixture& fixture : fixtures) {
    CHECK(fixture.family == "full");
    CHECK(fixture.n_start == 2 * fixture.m - 2);
    CHECK(fixture.prefix.size() == 9);
  }

  for (const OeisResult& result : run_oeis_checks()) {
    CAPTURE(result.id);
    CHECK(result.pass);
    CHECK(result.detail.empty());
  }
}
