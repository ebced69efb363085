#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polycount/bigint.hpp"

namespace polycount {

// Dense row-major matrix of exact integers. Sizes stay tiny (m <= 64 in
// every certified use), so no sparse or Toeplitz machinery.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  // Matrix times column vector; v.size() must equal cols().
  std::vector<BigInt> apply(std::span<const BigInt> v) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> cells_;
};

}  // namespace polycount
