#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polycount/bigint.hpp"

namespace polycount {

// Default resource guard for catalan_table(); large enough for every use in
// this project, small enough to catch runaway requests.
inline constexpr std::size_t kCatalanTableCap = 100000;

// Immutable prefix C_0..C_N of the Catalan numbers. Built once with the
// exact quotient recurrence C_{n+1} = C_n * 2(2n+1) / (n+2) and shared
// read-only by every evaluator.
class CatalanTable {
 public:
  const BigInt& at(std::size_t n) const;  // throws std::out_of_range
  std::size_t max_index() const { return values_.size() - 1; }
  std::span<const BigInt> values() const { return values_; }

 private:
  friend CatalanTable catalan_table(std::size_t, std::size_t);
  explicit CatalanTable(std::vector<BigInt> values) : values_(std::move(values)) {}
  std::vector<BigInt> values_;
};

// Table of C_0..C_N. Throws std::length_error when N exceeds the cap.
CatalanTable catalan_table(std::size_t max_index, std::size_t cap = kCatalanTableCap);

// Exact C_n for any n >= 0.
BigInt catalan(std::size_t n);

// 4^n / (sqrt(pi) * n^(3/2)), evaluated in log space. Throws
// std::invalid_argument for n = 0 and std::overflow_error once the value
// leaves the double range (n >= 520).
double catalan_asymptotic(std::size_t n);

}  // namespace polycount
