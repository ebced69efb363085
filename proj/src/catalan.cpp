#include "polycount/catalan.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace polycount {

namespace {

// C_{k+1} = C_k * 2(2k+1) / (k+2); the division is exact.
BigInt next_catalan(const BigInt& current, std::size_t k) {
  return current * (2 * (2 * k + 1)) / (k + 2);
}

}  // namespace

const BigInt& CatalanTable::at(std::size_t n) const {
  if (n >= values_.size()) {
    throw std::out_of_range("catalan table holds C_0..C_" + std::to_string(max_index()) +
                            ", asked for C_" + std::to_string(n));
  }
  return values_[n];
}

CatalanTable catalan_table(std::size_t max_index, std::size_t cap) {
  if (max_index > cap) {
    throw std::length_error("catalan table request " + std::to_string(max_index) +
                            " exceeds cap " + std::to_string(cap));
  }
  std::vector<BigInt> values(max_index + 1);
  values[0] = 1;
  for (std::size_t k = 0; k < max_index; ++k) {
    values[k + 1] = next_catalan(values[k], k);
  }
  return CatalanTable(std::move(values));
}

BigInt catalan(std::size_t n) {
  BigInt value = 1;
  for (std::size_t k = 0; k < n; ++k) {
    value = next_catalan(value, k);
  }
  return value;
}

double catalan_asymptotic(std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("catalan_asymptotic requires n >= 1");
  }
  const double log_value = std::log(4.0) * static_cast<double>(n) -
                           0.5 * std::log(std::acos(-1.0)) -
                           1.5 * std::log(static_cast<double>(n));
  if (log_value >= std::log(std::numeric_limits<double>::max())) {
    throw std::overflow_error("catalan_asymptotic(" + std::to_string(n) +
                              ") exceeds the double range");
  }
  return std::exp(log_value);
}

}  // namespace polycount
