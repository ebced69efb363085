#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycount/bigint.hpp"

namespace polycount {

struct CountRow {
  int n = 0;
  BigInt count;
  friend bool operator==(const CountRow&, const CountRow&) = default;
};

// One counting family at fixed m, serializable to CSV and JSON. Counts are
// carried as exact decimal strings in both formats so nothing is ever
// squeezed through a 64-bit or double field.
struct CountTable {
  std::string family;  // "full" or "path"
  int m = 2;
  std::optional<std::vector<BigInt>> coefficients;  // closed-form vector, if requested
  std::vector<CountRow> rows;                       // strictly increasing n

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

// {"family": ..., "m": ..., "coefficients"?: [...], "rows": [{"n":, "count":}]}
// with stable key order and counts as decimal strings.
std::string to_json(const CountTable& table);

// Header "n,count" then one row per line. CSV carries the rows only.
std::string to_csv(const CountTable& table);

CountTable count_table_from_json(const std::string& text);
CountTable count_table_from_csv(const std::string& text);

}  // namespace polycount
