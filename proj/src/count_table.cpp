#include "polycount/count_table.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace polycount {

namespace {

void validate_rows(const std::vector<CountRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].n <= rows[i - 1].n) {
      throw std::invalid_argument("count table rows must be strictly increasing in n");
    }
  }
}

}  // namespace

std::string to_json(const CountTable& table) {
  validate_rows(table.rows);
  nlohmann::ordered_json j;
  j["family"] = table.family;
  j["m"] = table.m;
  if (table.coefficients) {
    auto arr = nlohmann::ordered_json::array();
    for (const BigInt& c : *table.coefficients) {
      arr.push_back(to_decimal(c));
    }
    j["coefficients"] = std::move(arr);
  }
  auto rows = nlohmann::ordered_json::array();
  for (const CountRow& row : table.rows) {
    rows.push_back({{"n", row.n}, {"count", to_decimal(row.count)}});
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string to_csv(const CountTable& table) {
  validate_rows(table.rows);
  std::ostringstream out;
  out << "n,count\n";
  for (const CountRow& row : table.rows) {
    out << row.n << ',' << to_decimal(row.count) << '\n';
  }
  return out.str();
}

CountTable count_table_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CountTable table;
  table.family = j.at("family").get<std::string>();
  table.m = j.at("m").get<int>();
  if (j.contains("coefficients")) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coefficients")) {
      coeffs.push_back(parse_decimal(c.get<std::string>()));
    }
    table.coefficients = std::move(coeffs);
  }
  for (const auto& row : j.at("rows")) {
    table.rows.push_back(
        CountRow{row.at("n").get<int>(), parse_decimal(row.at("count").get<std::string>())});
  }
  validate_rows(table.rows);
  return table;
}

CountTable count_table_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "n,count") {
    throw std::invalid_argument("count table CSV must start with the header 'n,count'");
  }
  CountTable table;
  table.family.clear();
  table.m = 0;  // CSV carries rows only
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("bad CSV row: '" + line + "'");
    }
    CountRow row;
    row.n = std::stoi(line.substr(0, comma));
    row.count = parse_decimal(line.substr(comma + 1));
    table.rows.push_back(std::move(row));
  }
  validate_rows(table.rows);
  return table;
}

}  // namespace polycount
